#pragma once

#include <sstream>
#include <vector>

#include "rcc8seq/composition.hpp"
#include "rcc8seq/projection.hpp"

namespace rcc8seq {

/// A sequence relation: one RCC8 relation per time index, interpreted under a
/// fixed semantics. Values are immutable in spirit; all operators return
/// fresh sequences.
class SeqRelation {
 public:
  SeqRelation(Semantics sem, std::vector<Relation> parts)
      : sem_(sem), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != sem_.length())
      throw std::invalid_argument("sequence has " + std::to_string(parts_.size()) +
                                  " parts but semantics length is " +
                                  std::to_string(sem_.length()));
  }

  static SeqRelation universal(Semantics sem) {
    return SeqRelation(sem, std::vector<Relation>(sem.length(), Relation::universal()));
  }
  static SeqRelation constant(Semantics sem, Relation r) {
    return SeqRelation(sem, std::vector<Relation>(sem.length(), r));
  }

  const Semantics& semantics() const { return sem_; }
  int length() const { return sem_.length(); }

  /// 1-based component access, matching the index convention of the wiring.
  Relation at(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  void set(int i, Relation r) { parts_.at(static_cast<std::size_t>(i - 1)) = r; }

  const std::vector<Relation>& parts() const { return parts_; }

  bool trivially_unsatisfiable() const {
    for (Relation r : parts_)
      if (r.empty()) return true;
    return false;
  }

  bool is_basic_tuple() const {
    for (Relation r : parts_)
      if (!r.is_basic()) return false;
    return true;
  }

  bool is_universal() const {
    for (Relation r : parts_)
      if (!r.is_universal()) return false;
    return true;
  }

  /// Componentwise refinement order: this[i] subset of other[i] for all i.
  bool refines(const SeqRelation& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (!parts_[i].subset_of(other.parts_[i])) return false;
    return true;
  }

  void check_compatible(const SeqRelation& other) const {
    if (!(sem_ == other.sem_))
      throw std::invalid_argument("sequence relations have mismatched semantics");
  }

  friend bool operator==(const SeqRelation&, const SeqRelation&) = default;

 private:
  Semantics sem_;
  std::vector<Relation> parts_;
};

inline SeqRelation seq_union(const SeqRelation& a, const SeqRelation& b) {
  a.check_compatible(b);
  std::vector<Relation> out(a.parts());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] |= b.parts()[i];
  return SeqRelation(a.semantics(), std::move(out));
}

inline SeqRelation seq_intersect(const SeqRelation& a, const SeqRelation& b) {
  a.check_compatible(b);
  std::vector<Relation> out(a.parts());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] &= b.parts()[i];
  return SeqRelation(a.semantics(), std::move(out));
}

inline SeqRelation seq_converse(const SeqRelation& a) {
  std::vector<Relation> out(a.parts());
  for (Relation& r : out) r = r.converse();
  return SeqRelation(a.semantics(), std::move(out));
}

inline SeqRelation seq_compose(const SeqRelation& a, const SeqRelation& b,
                               const CompositionTable& t = composition_table()) {
  a.check_compatible(b);
  std::vector<Relation> out(a.parts().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = compose(a.parts()[i], b.parts()[i], t);
  return SeqRelation(a.semantics(), std::move(out));
}

/// Greatest fixed point below R of the per-index update
///   R[j] <- R[j] intersect proj(i->j, R[i])  for all i != j.
/// Only adjacent indices carry information, except that an empty component
/// empties every other component through the universal projections; both
/// effects are reached by the worklist below, since emptiness spreads along
/// adjacent updates too.
inline SeqRelation projection_closure(SeqRelation r) {
  const Semantics& sem = r.semantics();
  const int m = sem.length();
  if (m == 1) return r;

  std::vector<char> queued(static_cast<std::size_t>(m) + 1, 1);
  std::vector<int> worklist;
  worklist.reserve(static_cast<std::size_t>(m));
  for (int j = m; j >= 1; --j) worklist.push_back(j);

  auto enqueue = [&](int j) {
    if (j >= 1 && j <= m && !queued[static_cast<std::size_t>(j)]) {
      queued[static_cast<std::size_t>(j)] = 1;
      worklist.push_back(j);
    }
  };

  while (!worklist.empty()) {
    int j = worklist.back();
    worklist.pop_back();
    queued[static_cast<std::size_t>(j)] = 0;
    Relation updated = r.at(j);
    if (j > 1) updated &= project(adjacency_projection(sem, j - 1, j), r.at(j - 1));
    if (j < m) updated &= project(adjacency_projection(sem, j + 1, j), r.at(j + 1));
    if (updated != r.at(j)) {
      r.set(j, updated);
      enqueue(j - 1);
      enqueue(j + 1);
    }
  }
  return r;
}

inline bool is_conv_consistent(const SeqRelation& r) {
  return !r.trivially_unsatisfiable() && projection_closure(r) == r;
}

inline std::string to_string(const SeqRelation& r) {
  std::string out;
  for (int i = 1; i <= r.length(); ++i) {
    if (i > 1) out += ' ';
    out += to_string(r.at(i));
  }
  return out;
}

/// Parse the whitespace-separated text form, e.g. `{TPP,NTPP} {PO,EQ} * {DC}`.
inline SeqRelation parse_seq_relation(const Semantics& sem, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Relation> parts;
  std::string token;
  while (in >> token) parts.push_back(parse_relation(token));
  if (static_cast<int>(parts.size()) != sem.length())
    throw std::invalid_argument("expected " + std::to_string(sem.length()) +
                                " relation tokens, got " + std::to_string(parts.size()));
  return SeqRelation(sem, std::move(parts));
}

}  // namespace rcc8seq
