#pragma once

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcc8seq {

/// The eight basic RCC8 relations. The enumeration order fixes the bit
/// indices 0..7 used everywhere, including the file formats.
enum class Basic : std::uint8_t { DC = 0, EC, PO, TPP, NTPP, TPPI, NTPPI, EQ };

inline constexpr std::array<Basic, 8> kAllBasics = {
    Basic::DC,  Basic::EC,   Basic::PO,    Basic::TPP,
    Basic::NTPP, Basic::TPPI, Basic::NTPPI, Basic::EQ};

constexpr std::uint8_t basic_bit(Basic b) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(b));
}

constexpr Basic basic_converse(Basic b) {
  switch (b) {
    case Basic::TPP: return Basic::TPPI;
    case Basic::TPPI: return Basic::TPP;
    case Basic::NTPP: return Basic::NTPPI;
    case Basic::NTPPI: return Basic::NTPP;
    default: return b;
  }
}

constexpr std::string_view basic_name(Basic b) {
  switch (b) {
    case Basic::DC: return "DC";
    case Basic::EC: return "EC";
    case Basic::PO: return "PO";
    case Basic::TPP: return "TPP";
    case Basic::NTPP: return "NTPP";
    case Basic::TPPI: return "TPPI";
    case Basic::NTPPI: return "NTPPI";
    case Basic::EQ: return "EQ";
  }
  return "?";
}

/// An RCC8 relation: a set of basic relations packed into one byte.
/// The empty set is the empty relation, the full byte the universal one.
/// Union, intersection and subset tests are plain bit operations.
class Relation {
 public:
  constexpr Relation() = default;

  static constexpr Relation none() { return Relation(0); }
  static constexpr Relation universal() { return Relation(0xFF); }
  static constexpr Relation basic(Basic b) { return Relation(basic_bit(b)); }
  static constexpr Relation from_bits(std::uint8_t bits) { return Relation(bits); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_universal() const { return bits_ == 0xFF; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool is_basic() const { return count() == 1; }

  constexpr bool contains(Basic b) const { return (bits_ & basic_bit(b)) != 0; }
  constexpr bool contains(Relation r) const { return (bits_ & r.bits_) == r.bits_; }
  constexpr bool subset_of(Relation r) const { return r.contains(*this); }
  constexpr bool intersects(Relation r) const { return (bits_ & r.bits_) != 0; }

  /// The unique basic relation of a singleton; undefined for other sets.
  constexpr Basic single_basic() const {
    return static_cast<Basic>(std::countr_zero(bits_));
  }

  constexpr Relation operator|(Relation r) const { return Relation(bits_ | r.bits_); }
  constexpr Relation operator&(Relation r) const { return Relation(bits_ & r.bits_); }
  /// Set difference within the universe of eight basics.
  constexpr Relation operator-(Relation r) const {
    return Relation(static_cast<std::uint8_t>(bits_ & ~r.bits_));
  }
  constexpr Relation& operator|=(Relation r) { bits_ |= r.bits_; return *this; }
  constexpr Relation& operator&=(Relation r) { bits_ &= r.bits_; return *this; }

  constexpr Relation converse() const {
    std::uint8_t b = bits_;
    std::uint8_t fixed = b & 0x87;  // DC, EC, PO, EQ are their own converses
    std::uint8_t swapped = static_cast<std::uint8_t>(((b & 0x18) << 2) | ((b & 0x60) >> 2));
    return Relation(static_cast<std::uint8_t>(fixed | swapped));
  }

  friend constexpr bool operator==(Relation, Relation) = default;

 private:
  constexpr explicit Relation(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

inline constexpr Relation DC = Relation::basic(Basic::DC);
inline constexpr Relation EC = Relation::basic(Basic::EC);
inline constexpr Relation PO = Relation::basic(Basic::PO);
inline constexpr Relation TPP = Relation::basic(Basic::TPP);
inline constexpr Relation NTPP = Relation::basic(Basic::NTPP);
inline constexpr Relation TPPI = Relation::basic(Basic::TPPI);
inline constexpr Relation NTPPI = Relation::basic(Basic::NTPPI);
inline constexpr Relation EQ = Relation::basic(Basic::EQ);
inline constexpr Relation B_RCC8 = Relation::universal();

constexpr Relation converse(Relation r) { return r.converse(); }

// ---------------------------------------------------------------------------
// Fragment predicates. N, NP8 and P8 = A \ NP8 are evaluated literally on the
// bitset; H8, Q8 and C8 are the corresponding restrictions of P8.
// ---------------------------------------------------------------------------

constexpr bool in_N(Relation r) {
  return !r.contains(Basic::PO) && r.intersects(TPP | NTPP) &&
         r.intersects(TPPI | NTPPI);
}

constexpr bool in_NP8(Relation r) {
  if (in_N(r)) return true;
  // The four enumerated unions r1 | EC | r2 | EQ with r1 in {none, DC} and
  // r2 in {NTPP, NTPPI}.
  constexpr Relation extras[4] = {
      EC | NTPP | EQ,
      EC | NTPPI | EQ,
      DC | EC | NTPP | EQ,
      DC | EC | NTPPI | EQ,
  };
  for (Relation e : extras)
    if (r == e) return true;
  return false;
}

constexpr bool in_P8(Relation r) { return !in_NP8(r); }

constexpr bool in_H8(Relation r) {
  if (!in_P8(r)) return false;
  if (r.contains(NTPP | EQ) && !r.contains(Basic::TPP)) return false;
  if (r.contains(NTPPI | EQ) && !r.contains(Basic::TPPI)) return false;
  return true;
}

constexpr bool in_Q8(Relation r) {
  if (!in_P8(r)) return false;
  if (r.contains(Basic::EQ) && r.intersects(TPP | NTPP | TPPI | NTPPI) &&
      !r.contains(Basic::PO))
    return false;
  return true;
}

constexpr bool in_C8(Relation r) {
  if (!in_P8(r)) return false;
  if (r.contains(Basic::EC) && r.intersects(TPP | NTPP | TPPI | NTPPI | EQ) &&
      !r.contains(Basic::PO))
    return false;
  return true;
}

/// Members of H8 whose non-tangential proper-part side always comes with the
/// tangential one: NTPP in r implies TPP in r, and symmetrically for the
/// converses.
constexpr bool in_Hntpp(Relation r) {
  if (!in_H8(r)) return false;
  if (r.contains(Basic::NTPP) && !r.contains(Basic::TPP)) return false;
  if (r.contains(Basic::NTPPI) && !r.contains(Basic::TPPI)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Refinements.
// ---------------------------------------------------------------------------

/// a_b: collapse r to the basic relation b whenever b is contained in r.
constexpr Relation a_refine(Basic b, Relation r) {
  return r.contains(b) ? Relation::basic(b) : r;
}

/// h_H8 = a_TPPI . a_TPP . a_PO . a_EC . a_DC (innermost first).
/// Maps every nonempty member of H8 or Q8 to a basic relation.
constexpr Relation h_H8(Relation r) {
  r = a_refine(Basic::DC, r);
  r = a_refine(Basic::EC, r);
  r = a_refine(Basic::PO, r);
  r = a_refine(Basic::TPP, r);
  r = a_refine(Basic::TPPI, r);
  return r;
}

/// h_C8 = a_TPPI . a_TPP . a_NTPPI . a_NTPP . a_PO . a_DC (innermost first).
/// Maps every nonempty member of C8 to a basic relation.
constexpr Relation h_C8(Relation r) {
  r = a_refine(Basic::DC, r);
  r = a_refine(Basic::PO, r);
  r = a_refine(Basic::NTPP, r);
  r = a_refine(Basic::NTPPI, r);
  r = a_refine(Basic::TPP, r);
  r = a_refine(Basic::TPPI, r);
  return r;
}

// ---------------------------------------------------------------------------
// Text form: `*` is universal, `{}` empty, otherwise `{TOK,TOK,...}`.
// Input tokens are case-insensitive; output is uppercase in bit order.
// ---------------------------------------------------------------------------

inline std::string to_string(Relation r) {
  if (r.is_universal()) return "*";
  std::string out = "{";
  bool first = true;
  for (Basic b : kAllBasics) {
    if (!r.contains(b)) continue;
    if (!first) out += ',';
    out += basic_name(b);
    first = false;
  }
  out += '}';
  return out;
}

inline Basic parse_basic(std::string_view token) {
  std::string upper(token);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Basic b : kAllBasics)
    if (upper == basic_name(b)) return b;
  throw std::invalid_argument("unknown RCC8 relation token '" + std::string(token) + "'");
}

inline Relation parse_relation(std::string_view text) {
  if (text == "*") return Relation::universal();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("malformed relation '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  Relation r;
  while (!body.empty()) {
    std::size_t comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    if (token.empty())
      throw std::invalid_argument("malformed relation '" + std::string(text) + "'");
    r |= Relation::basic(parse_basic(token));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty())
      throw std::invalid_argument("malformed relation '" + std::string(text) + "'");
  }
  return r;
}

}  // namespace rcc8seq
