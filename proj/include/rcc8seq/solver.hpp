#pragma once

#include <optional>

#include "rcc8seq/network.hpp"

namespace rcc8seq {

struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// All basic tuples inside r whose adjacent components satisfy the projection
/// wiring in both directions, i.e. the conv-consistent basic refinements.
inline std::vector<std::vector<Basic>> conv_consistent_basic_tuples(const SeqRelation& r) {
  const Semantics& sem = r.semantics();
  const int m = sem.length();
  std::vector<std::vector<Basic>> out;
  std::vector<Basic> partial;

  auto extend = [&](auto&& self, int i) -> void {
    if (i > m) {
      out.push_back(partial);
      return;
    }
    for (Basic b : kAllBasics) {
      if (!r.at(i).contains(b)) continue;
      if (i > 1) {
        Basic prev = partial.back();
        Relation fwd = project(adjacency_projection(sem, i - 1, i), Relation::basic(prev));
        Relation bwd = project(adjacency_projection(sem, i, i - 1), Relation::basic(b));
        if (!fwd.contains(b) || !bwd.contains(prev)) continue;
      }
      partial.push_back(b);
      self(self, i + 1);
      partial.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

inline SeqRelation tuple_to_seq(const Semantics& sem, const std::vector<Basic>& tuple) {
  std::vector<Relation> parts;
  parts.reserve(tuple.size());
  for (Basic b : tuple) parts.push_back(Relation::basic(b));
  return SeqRelation(sem, std::move(parts));
}

/// Refinement-guided value order: the componentwise h image (h_H8 on H8/Q8
/// components, h_C8 otherwise) is tried first when it is a valid candidate.
inline void prefer_h_tuple(const SeqRelation& rel, std::vector<std::vector<Basic>>& cands) {
  std::vector<Basic> preferred;
  for (int i = 1; i <= rel.length(); ++i) {
    Relation r = rel.at(i);
    Relation h = (in_H8(r) || in_Q8(r)) ? h_H8(r) : h_C8(r);
    if (!h.is_basic()) return;
    preferred.push_back(h.single_basic());
  }
  auto it = std::find(cands.begin(), cands.end(), preferred);
  if (it != cands.end()) std::rotate(cands.begin(), it, it + 1);
}

inline std::optional<Network> closed_scenario_search(const Network& n,
                                                     const CompositionTable& table) {
  if (n.trivially_unsatisfiable()) return std::nullopt;

  int best_x = -1, best_y = -1;
  long best_count = 0;
  for (int x = 0; x < n.var_count(); ++x) {
    for (int y = x + 1; y < n.var_count(); ++y) {
      const SeqRelation& r = n.rel(x, y);
      if (r.is_basic_tuple()) continue;
      long count = 1;
      for (Relation part : r.parts()) count *= part.count();
      if (best_x < 0 || count < best_count) {
        best_x = x;
        best_y = y;
        best_count = count;
      }
    }
  }
  if (best_x < 0) return n;  // all pairs basic: a closed, consistent scenario

  auto cands = conv_consistent_basic_tuples(n.rel(best_x, best_y));
  prefer_h_tuple(n.rel(best_x, best_y), cands);
  for (const auto& tuple : cands) {
    Network refined = n;
    refined.set_rel(best_x, best_y, tuple_to_seq(n.semantics(), tuple));
    Network closed = algebraic_closure(std::move(refined), table);
    if (closed.trivially_unsatisfiable()) continue;
    if (auto found = closed_scenario_search(closed, table)) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides weak satisfiability: returns an algebraically closed scenario
/// refining n, or nothing when no such scenario exists.
inline std::optional<Network> find_closed_scenario(const Network& n,
                                                   const CompositionTable& table = composition_table()) {
  if (n.var_count() < 2) return n;
  return detail::closed_scenario_search(algebraic_closure(n, table), table);
}

/// Independent oracle: enumerate the algebraically closed, non-trivially-
/// unsatisfiable basic-tuple refinements of n by plain chronological
/// backtracking with direct condition checks (no propagation), truncated at
/// limit. Guarded against large instances unless allow_large is set.
inline std::vector<Network> brute_force_scenarios(const Network& n, std::size_t limit,
                                                  bool allow_large = false,
                                                  const CompositionTable& table = composition_table()) {
  if (!allow_large && (n.var_count() > 5 || n.semantics().length() > 4))
    throw InstanceTooLarge("brute-force enumeration guarded at 5 variables / length 4");

  std::vector<Network> found;
  if (limit == 0) return found;
  if (n.var_count() < 2) {
    found.push_back(n);
    return found;
  }

  const int nv = n.var_count();
  struct Slot {
    int x, y;
    std::vector<std::vector<Basic>> cands;
  };
  std::vector<Slot> slots;
  for (int x = 0; x < nv; ++x)
    for (int y = x + 1; y < nv; ++y)
      slots.push_back({x, y, detail::conv_consistent_basic_tuples(n.rel(x, y))});
  // Static order, most constrained first; ties resolved by pair order.
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.cands.size() < b.cands.size(); });

  std::vector<int> slot_of(static_cast<std::size_t>(nv * nv), -1);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    slot_of[static_cast<std::size_t>(slots[k].x * nv + slots[k].y)] = static_cast<int>(k);
    slot_of[static_cast<std::size_t>(slots[k].y * nv + slots[k].x)] = static_cast<int>(k);
  }
  std::vector<int> chosen(slots.size(), -1);

  const int m = n.semantics().length();
  // Basic relation of the ordered pair (a,b) at sequence position i (0-based).
  auto basic_at = [&](int a, int b, int i) {
    int k = slot_of[static_cast<std::size_t>(a * nv + b)];
    const Slot& s = slots[static_cast<std::size_t>(k)];
    Basic raw = s.cands[static_cast<std::size_t>(chosen[static_cast<std::size_t>(k)])]
                       [static_cast<std::size_t>(i)];
    return (a == s.x) ? raw : basic_converse(raw);
  };
  auto composition_holds = [&](int a, int b, int c) {
    // B(a,c) must lie inside B(a,b) . B(b,c) at every position.
    for (int i = 0; i < m; ++i)
      if (!table.at(basic_at(a, b, i), basic_at(b, c, i)).contains(basic_at(a, c, i)))
        return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == slots.size()) {
      Network scenario(n.semantics(), n.vars());
      for (std::size_t s = 0; s < slots.size(); ++s)
        scenario.set_rel(slots[s].x, slots[s].y,
                         detail::tuple_to_seq(n.semantics(),
                                              slots[s].cands[static_cast<std::size_t>(chosen[s])]));
      found.push_back(std::move(scenario));
      return found.size() >= limit;
    }
    const Slot& slot = slots[k];
    for (std::size_t c = 0; c < slot.cands.size(); ++c) {
      chosen[k] = static_cast<int>(c);
      bool ok = true;
      for (int z = 0; z < nv && ok; ++z) {
        if (z == slot.x || z == slot.y) continue;
        int kxz = slot_of[static_cast<std::size_t>(slot.x * nv + z)];
        int kyz = slot_of[static_cast<std::size_t>(slot.y * nv + z)];
        if (chosen[static_cast<std::size_t>(kxz)] < 0 || chosen[static_cast<std::size_t>(kyz)] < 0)
          continue;
        ok = composition_holds(slot.x, slot.y, z) && composition_holds(slot.x, z, slot.y) &&
             composition_holds(z, slot.x, slot.y);
      }
      if (ok && self(self, k + 1)) return true;
    }
    chosen[k] = -1;
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace rcc8seq
