#pragma once

#include <string>

#include "rcc8seq/relation.hpp"

namespace rcc8seq {

/// Weak-composition table over the basic relations: cell[b][b2] is the set of
/// basic relations consistent with some pair composed through b then b2.
struct CompositionTable {
  std::array<std::array<Relation, 8>, 8> cell;

  constexpr Relation at(Basic b, Basic b2) const {
    return cell[static_cast<std::size_t>(b)][static_cast<std::size_t>(b2)];
  }
};

namespace detail {

// The standard RCC8 weak-composition table, transcribed row by row in bit
// order. Guarded below by validate_table: identity row/column, converse
// symmetry, and four anchor compositions.
constexpr CompositionTable make_rcc8_table() {
  CompositionTable t{};
  auto row = [&t](Basic b, std::array<Relation, 8> cells) {
    t.cell[static_cast<std::size_t>(b)] = cells;
  };
  row(Basic::DC, {B_RCC8,                    // DC . DC
                  DC | EC | PO | TPP | NTPP, // DC . EC
                  DC | EC | PO | TPP | NTPP, // DC . PO
                  DC | EC | PO | TPP | NTPP, // DC . TPP
                  DC | EC | PO | TPP | NTPP, // DC . NTPP
                  DC,                        // DC . TPPI
                  DC,                        // DC . NTPPI
                  DC});                      // DC . EQ
  row(Basic::EC, {DC | EC | PO | TPPI | NTPPI,
                  DC | EC | PO | TPP | TPPI | EQ,
                  DC | EC | PO | TPP | NTPP,
                  EC | PO | TPP | NTPP,
                  PO | TPP | NTPP,
                  DC | EC,
                  DC,
                  EC});
  row(Basic::PO, {DC | EC | PO | TPPI | NTPPI,
                  DC | EC | PO | TPPI | NTPPI,
                  B_RCC8,
                  PO | TPP | NTPP,
                  PO | TPP | NTPP,
                  DC | EC | PO | TPPI | NTPPI,
                  DC | EC | PO | TPPI | NTPPI,
                  PO});
  row(Basic::TPP, {DC,
                   DC | EC,
                   DC | EC | PO | TPP | NTPP,
                   TPP | NTPP,
                   NTPP,
                   DC | EC | PO | TPP | TPPI | EQ,
                   DC | EC | PO | TPPI | NTPPI,
                   TPP});
  row(Basic::NTPP, {DC,
                    DC,
                    DC | EC | PO | TPP | NTPP,
                    NTPP,
                    NTPP,
                    DC | EC | PO | TPP | NTPP,
                    B_RCC8,
                    NTPP});
  row(Basic::TPPI, {DC | EC | PO | TPPI | NTPPI,
                    EC | PO | TPPI | NTPPI,
                    PO | TPPI | NTPPI,
                    PO | TPP | TPPI | EQ,
                    PO | TPP | NTPP,
                    TPPI | NTPPI,
                    NTPPI,
                    TPPI});
  row(Basic::NTPPI, {DC | EC | PO | TPPI | NTPPI,
                     PO | TPPI | NTPPI,
                     PO | TPPI | NTPPI,
                     PO | TPPI | NTPPI,
                     PO | TPP | NTPP | TPPI | NTPPI | EQ,
                     NTPPI,
                     NTPPI,
                     NTPPI});
  row(Basic::EQ, {DC, EC, PO, TPP, NTPP, TPPI, NTPPI, EQ});
  return t;
}

inline constexpr CompositionTable kRcc8Composition = make_rcc8_table();

}  // namespace detail

constexpr const CompositionTable& composition_table() {
  return detail::kRcc8Composition;
}

/// Weak composition extended to relation sets: union of the table cells over
/// all pairs of contained basics. Empty whenever either operand is empty.
constexpr Relation compose(Relation r, Relation r2,
                           const CompositionTable& t = composition_table()) {
  Relation out;
  for (Basic b : kAllBasics) {
    if (!r.contains(b)) continue;
    for (Basic b2 : kAllBasics) {
      if (!r2.contains(b2)) continue;
      out |= t.at(b, b2);
    }
  }
  return out;
}

struct ValidationReport {
  bool ok = true;
  std::string detail;
};

namespace detail {

// Identity rows/columns and converse symmetry; constexpr so the shipped
// table can be rejected at compile time.
constexpr bool table_structure_ok(const CompositionTable& t) {
  for (Basic b : kAllBasics) {
    if (t.at(Basic::EQ, b) != Relation::basic(b)) return false;
    if (t.at(b, Basic::EQ) != Relation::basic(b)) return false;
  }
  for (Basic b : kAllBasics)
    for (Basic b2 : kAllBasics)
      if (t.at(b, b2).converse() != t.at(basic_converse(b2), basic_converse(b)))
        return false;
  return true;
}

// Anchor compositions of the standard table. (TPP|EQ).TPP is TPP|NTPP since
// TPP.TPP contains NTPP; the proper-part analogue (PP|EQ).PP = PP is the one
// that collapses, PP being TPP|NTPP.
constexpr bool table_anchors_ok(const CompositionTable& t) {
  if (compose(TPP | EQ, TPP, t) != (TPP | NTPP)) return false;
  if (compose(DC, DC, t) != B_RCC8) return false;
  if ((compose(EC, EC, t) & compose(EC, NTPP, t)) != (PO | TPP)) return false;
  if (compose(TPPI, TPP, t) != (PO | TPP | TPPI | EQ)) return false;
  return true;
}

}  // namespace detail

/// Full validation with a human-readable failure reason; the shipped table is
/// additionally checked by static_assert at the bottom of this header.
inline ValidationReport validate_table(const CompositionTable& t) {
  for (Basic b : kAllBasics) {
    if (t.at(Basic::EQ, b) != Relation::basic(b))
      return {false, "identity row broken at EQ . " + std::string(basic_name(b))};
    if (t.at(b, Basic::EQ) != Relation::basic(b))
      return {false, "identity column broken at " + std::string(basic_name(b)) + " . EQ"};
  }
  for (Basic b : kAllBasics) {
    for (Basic b2 : kAllBasics) {
      if (t.at(b, b2).converse() != t.at(basic_converse(b2), basic_converse(b)))
        return {false, "converse asymmetry at " + std::string(basic_name(b)) + " . " +
                           std::string(basic_name(b2))};
    }
  }
  if (!detail::table_anchors_ok(t)) return {false, "anchor composition mismatch"};
  return {true, ""};
}

static_assert(detail::table_structure_ok(detail::kRcc8Composition),
              "shipped composition table violates identity or converse symmetry");
static_assert(detail::table_anchors_ok(detail::kRcc8Composition),
              "shipped composition table fails an anchor composition");

}  // namespace rcc8seq
