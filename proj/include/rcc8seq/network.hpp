#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcc8seq/sequence.hpp"

namespace rcc8seq {

/// A qualitative constraint network: named variables plus one sequence
/// relation per ordered pair of distinct variables, kept converse-symmetric
/// at all times. Unset pairs are universal; the self relation is the implicit
/// identity and is not stored. A network being closed or searched is owned by
/// a single caller; quiescent networks are safe to share read-only.
class Network {
 public:
  Network(Semantics sem, std::vector<std::string> vars)
      : sem_(sem), vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty())
        throw std::invalid_argument("empty variable name");
      if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
    }
    rel_.assign(vars_.size() * vars_.size(), SeqRelation::universal(sem_));
  }

  const Semantics& semantics() const { return sem_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int x) const { return vars_.at(static_cast<std::size_t>(x)); }

  bool has_var(const std::string& name) const { return index_.count(name) != 0; }
  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return it->second;
  }

  const SeqRelation& rel(int x, int y) const {
    check_pair(x, y);
    return rel_[cell(x, y)];
  }
  const SeqRelation& rel(const std::string& x, const std::string& y) const {
    return rel(var_index(x), var_index(y));
  }

  /// Sets both orientations at once, preserving converse symmetry.
  void set_rel(int x, int y, const SeqRelation& r) {
    check_pair(x, y);
    r.check_compatible(rel_[cell(x, y)]);
    rel_[cell(x, y)] = r;
    rel_[cell(y, x)] = seq_converse(r);
  }
  void set_rel(const std::string& x, const std::string& y, const SeqRelation& r) {
    set_rel(var_index(x), var_index(y), r);
  }

  void intersect_rel(int x, int y, const SeqRelation& r) {
    set_rel(x, y, seq_intersect(rel(x, y), r));
  }

  bool trivially_unsatisfiable() const {
    for (int x = 0; x < var_count(); ++x)
      for (int y = x + 1; y < var_count(); ++y)
        if (rel(x, y).trivially_unsatisfiable()) return true;
    return false;
  }

  /// A scenario: every relation is a tuple of basic relations.
  bool is_scenario() const {
    for (int x = 0; x < var_count(); ++x)
      for (int y = x + 1; y < var_count(); ++y)
        if (!rel(x, y).is_basic_tuple()) return false;
    return true;
  }

  /// Componentwise refinement of another network on the same variables.
  bool refines(const Network& other) const {
    if (vars_ != other.vars_ || !(sem_ == other.sem_))
      throw std::invalid_argument("networks are not comparable");
    for (int x = 0; x < var_count(); ++x)
      for (int y = x + 1; y < var_count(); ++y)
        if (!rel(x, y).refines(other.rel(x, y))) return false;
    return true;
  }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t cell(int x, int y) const {
    return static_cast<std::size_t>(x) * vars_.size() + static_cast<std::size_t>(y);
  }
  void check_pair(int x, int y) const {
    if (x < 0 || y < 0 || x >= var_count() || y >= var_count() || x == y)
      throw std::out_of_range("bad variable pair (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
  }

  Semantics sem_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, int> index_;
  std::vector<SeqRelation> rel_;
};

/// The classical RCC8 network at one time index, represented as a degenerate
/// length-1 sequence network.
inline Network slice(const Network& n, int i) {
  if (i < 1 || i > n.semantics().length())
    throw std::out_of_range("slice index out of range");
  Network out(Semantics::neighbour(1), n.vars());
  for (int x = 0; x < n.var_count(); ++x)
    for (int y = x + 1; y < n.var_count(); ++y)
      out.set_rel(x, y, SeqRelation(out.semantics(), {n.rel(x, y).at(i)}));
  return out;
}

/// Algebraic closure: the greatest fixed point below N of composition
/// tightening rel(x,z) <- rel(x,z) intersect rel(x,y) . rel(y,z) interleaved
/// with projection closure of every relation. A pair is re-enqueued whenever
/// a relation sharing one of its variables changes. A nonzero seed randomizes
/// the processing order; the fixed point does not depend on it.
inline Network algebraic_closure(Network n, const CompositionTable& table = composition_table(),
                                 std::uint64_t seed = 0) {
  const int nv = n.var_count();
  if (nv < 2) return n;

  struct Pair { int x, y; };
  std::vector<Pair> pairs;
  std::vector<char> queued;
  auto pair_id = [nv](int x, int y) { return x * nv + y; };
  queued.assign(static_cast<std::size_t>(nv * nv), 0);

  auto enqueue = [&](int x, int y) {
    if (!queued[static_cast<std::size_t>(pair_id(x, y))]) {
      queued[static_cast<std::size_t>(pair_id(x, y))] = 1;
      pairs.push_back({x, y});
    }
  };
  for (int x = 0; x < nv; ++x)
    for (int y = x + 1; y < nv; ++y) enqueue(x, y);

  std::mt19937_64 rng(seed);
  std::size_t head = 0;
  while (head < pairs.size()) {
    if (seed != 0) {
      std::uniform_int_distribution<std::size_t> pick(head, pairs.size() - 1);
      std::swap(pairs[head], pairs[pick(rng)]);
    }
    auto [x, y] = pairs[head++];
    queued[static_cast<std::size_t>(pair_id(x, y))] = 0;

    SeqRelation updated = projection_closure(n.rel(x, y));
    for (int z = 0; z < nv; ++z) {
      if (z == x || z == y) continue;
      SeqRelation through = seq_compose(n.rel(x, z), n.rel(z, y), table);
      SeqRelation tightened = seq_intersect(updated, through);
      if (!(tightened == updated)) updated = projection_closure(tightened);
    }
    if (!(updated == n.rel(x, y))) {
      n.set_rel(x, y, updated);
      for (int z = 0; z < nv; ++z) {
        if (z == x || z == y) continue;
        enqueue(std::min(x, z), std::max(x, z));
        enqueue(std::min(y, z), std::max(y, z));
      }
    }
    // Drop the processed prefix once it grows.
    if (head > 4096) {
      pairs.erase(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(head));
      head = 0;
    }
  }
  return n;
}

/// Closed under composition and projection, and not trivially unsatisfiable.
/// Equivalent to algebraic_closure(n) == n plus the triviality check.
inline bool is_algebraically_consistent(const Network& n,
                                        const CompositionTable& table = composition_table()) {
  const int nv = n.var_count();
  for (int x = 0; x < nv; ++x) {
    for (int y = x + 1; y < nv; ++y) {
      const SeqRelation& r = n.rel(x, y);
      if (r.trivially_unsatisfiable()) return false;
      if (!(projection_closure(r) == r)) return false;
    }
  }
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y) {
      if (y == x) continue;
      for (int z = 0; z < nv; ++z) {
        if (z == x || z == y) continue;
        if (!n.rel(x, z).refines(seq_compose(n.rel(x, y), n.rel(y, z), table)))
          return false;
      }
    }
  return true;
}

}  // namespace rcc8seq
