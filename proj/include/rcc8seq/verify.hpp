#pragma once

#include "rcc8seq/fragments.hpp"
#include "rcc8seq/solver.hpp"

namespace rcc8seq {

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;  // first counterexample on failure
};

/// The six-variable, length-4 neighbouring-instants network witnessing that
/// algebraic closure does not decide weak satisfiability: the network below
/// is algebraically consistent after closure, yet contains no algebraically
/// closed scenario.
inline Network counterexample_network() {
  Semantics sem = Semantics::neighbour(4);
  Network n(sem, {"u", "v", "w", "x", "y", "z"});
  auto set = [&](const char* x, const char* y, Relation r1, Relation r2, Relation r3,
                 Relation r4) {
    n.set_rel(x, y, SeqRelation(sem, {r1, r2, r3, r4}));
  };
  const Relation B = B_RCC8;
  const Relation ring = PO | TPP | TPPI | EQ;
  set("x", "y", NTPP, B, B, NTPPI);
  set("x", "z", NTPP, B, B, B);
  set("w", "z", B, B, NTPP, B);
  set("y", "z", TPPI, ring, B, B);
  set("w", "x", TPPI, ring, B, B);
  set("w", "y", B, PO | TPP, B, B);
  set("x", "u", B, B, B, NTPPI);
  set("v", "u", B, NTPPI, B, B);
  set("y", "u", B, B, ring, TPP);
  set("v", "x", B, B, ring, TPP);
  set("v", "y", B, B, PO | TPPI, B);
  return n;
}

/// The closure of the counterexample network, pair by pair.
inline Network counterexample_closure_expected() {
  Semantics sem = Semantics::neighbour(4);
  Network n(sem, {"u", "v", "w", "x", "y", "z"});
  auto set = [&](const char* x, const char* y, Relation r1, Relation r2, Relation r3,
                 Relation r4) {
    n.set_rel(x, y, SeqRelation(sem, {r1, r2, r3, r4}));
  };
  const Relation B = B_RCC8;
  set("x", "y", NTPP, TPP | NTPP | EQ, TPPI | NTPPI | EQ, NTPPI);
  set("y", "z", TPPI, PO | TPPI | EQ, B - (DC | EC), B - DC);
  set("x", "z", NTPP, TPP | NTPP | EQ, B - (DC | EC), B - (DC | EC));
  set("w", "x", TPPI, PO | TPPI | EQ, B - (DC | NTPPI), B);
  set("w", "y", PO | TPP | NTPP, PO | TPP, B - (DC | NTPPI), B);
  set("w", "z", PO | TPP | NTPP, TPP | NTPP | EQ, NTPP, TPP | NTPP | EQ);
  set("u", "x", B - DC, B - (DC | EC), TPP | NTPP | EQ, NTPP);
  set("u", "y", B - (DC | EC), B - (DC | EC), PO | TPPI | EQ, TPPI);
  set("u", "z", B - (DC | EC), B - (DC | EC), B - DC, B - DC);
  set("u", "w", B - DC, B, B, B);
  set("v", "x", B - DC, B - (DC | EC | NTPP), PO | TPP | EQ, TPP);
  set("v", "y", B - (DC | EC), B - (DC | EC | NTPP), PO | TPPI, EC | PO | TPPI | NTPPI);
  set("v", "z", B - (DC | EC), B - (DC | EC), B - DC, B);
  set("v", "w", B - DC, B, B, B);
  set("v", "u", TPPI | NTPPI | EQ, NTPPI, TPPI | NTPPI | EQ, PO | TPPI | NTPPI);
  return n;
}

namespace detail {

inline std::vector<Relation> members_of(bool (*pred)(Relation)) {
  std::vector<Relation> out;
  for (int bits = 0; bits < 256; ++bits) {
    Relation r = Relation::from_bits(static_cast<std::uint8_t>(bits));
    if (pred(r)) out.push_back(r);
  }
  return out;
}

inline std::string describe_mismatch(const Network& got, const Network& want) {
  for (int x = 0; x < got.var_count(); ++x)
    for (int y = x + 1; y < got.var_count(); ++y)
      for (int i = 1; i <= got.semantics().length(); ++i)
        if (got.rel(x, y).at(i) != want.rel(x, y).at(i))
          return "pair " + got.var_name(x) + " " + got.var_name(y) + " index " +
                 std::to_string(i) + ": got " + to_string(got.rel(x, y).at(i)) + ", want " +
                 to_string(want.rel(x, y).at(i));
  return "";
}

}  // namespace detail

inline ClaimResult claim_counterexample_closure(const CompositionTable& table = composition_table()) {
  Network closed = algebraic_closure(counterexample_network(), table);
  Network want = counterexample_closure_expected();
  std::string mismatch = detail::describe_mismatch(closed, want);
  return {"counterexample-closure", mismatch.empty(), mismatch};
}

inline ClaimResult claim_counterexample_consistent(const CompositionTable& table = composition_table()) {
  Network closed = algebraic_closure(counterexample_network(), table);
  bool ok = is_algebraically_consistent(closed, table);
  return {"counterexample-consistent", ok, ok ? "" : "closure is not algebraically consistent"};
}

inline ClaimResult claim_counterexample_unsat(const CompositionTable& table = composition_table()) {
  bool ok = !find_closed_scenario(counterexample_network(), table).has_value();
  return {"counterexample-unsat", ok, ok ? "" : "an algebraically closed scenario was found"};
}

/// Replays the refinement argument: fixing the x/y relation at index 2 to any
/// of its basic refinements and re-closing empties the network, the conflict
/// surfacing as the empty intersection of the three w-row relations at that
/// index.
inline ClaimResult claim_counterexample_eq_refinement(const CompositionTable& table = composition_table()) {
  const std::string id = "counterexample-eq-refinement";
  Network closed = algebraic_closure(counterexample_network(), table);

  Relation w_row = closed.rel("w", "x").at(2) & closed.rel("w", "y").at(2) &
                   closed.rel("w", "z").at(2);
  if (!w_row.empty())
    return {id, false, "w-row intersection at index 2 is " + to_string(w_row) + ", want {}"};

  Relation slice2 = closed.rel("x", "y").at(2);
  for (Basic b : kAllBasics) {
    if (!slice2.contains(b)) continue;
    Network refined = closed;
    SeqRelation r = refined.rel("x", "y");
    r.set(2, Relation::basic(b));
    refined.set_rel("x", "y", r);
    if (!algebraic_closure(std::move(refined), table).trivially_unsatisfiable())
      return {id, false, "refining index 2 of x y to " + std::string(basic_name(b)) +
                             " stays non-trivial after closure"};
  }
  return {id, true, ""};
}

/// The two-index network built from slices 2 and 3 of the closure: already
/// algebraically consistent, yet without any closed scenario.
inline Network counterexample_m2_network(const CompositionTable& table = composition_table()) {
  Network closed = algebraic_closure(counterexample_network(), table);
  Semantics sem = Semantics::neighbour(2);
  Network derived(sem, closed.vars());
  for (int x = 0; x < closed.var_count(); ++x)
    for (int y = x + 1; y < closed.var_count(); ++y)
      derived.set_rel(x, y, SeqRelation(sem, {closed.rel(x, y).at(2), closed.rel(x, y).at(3)}));
  return derived;
}

inline ClaimResult claim_counterexample_m2(const CompositionTable& table = composition_table()) {
  const std::string id = "counterexample-m2-derivative";
  Network derived = counterexample_m2_network(table);
  if (!is_algebraically_consistent(derived, table))
    return {id, false, "derived length-2 network is not algebraically consistent"};
  if (find_closed_scenario(derived, table).has_value())
    return {id, false, "derived length-2 network has a closed scenario"};
  return {id, true, ""};
}

inline ClaimResult claim_hntpp_subclass(const CompositionTable& table = composition_table()) {
  const std::string id = "hntpp-subclass";
  auto hn = detail::members_of(in_Hntpp);
  for (Relation a : hn) {
    if (!in_Hntpp(a.converse()))
      return {id, false, "converse of " + to_string(a) + " leaves the set"};
    for (Relation b : hn) {
      if (!in_Hntpp(a & b))
        return {id, false, to_string(a) + " intersect " + to_string(b) + " leaves the set"};
      if (!in_Hntpp(compose(a, b, table)))
        return {id, false, to_string(a) + " composed with " + to_string(b) + " leaves the set"};
    }
  }
  return {id, true, ""};
}

inline ClaimResult claim_neighbour_fragment_exchange() {
  const std::string id = "neighbour-q8-hntpp-exchange";
  for (Relation r : detail::members_of(in_Q8))
    if (!in_Hntpp(project(ProjectionKind::Neighbour, r)))
      return {id, false, "neighbour projection of Q8 member " + to_string(r) + " not in HNTPP"};
  for (Relation r : detail::members_of(in_Hntpp))
    if (!in_Q8(project(ProjectionKind::Neighbour, r)))
      return {id, false, "neighbour projection of HNTPP member " + to_string(r) + " not in Q8"};
  return {id, true, ""};
}

namespace detail {

inline ClaimResult refinement_stability_claim(std::string id, SemanticsKind kind,
                                              const std::vector<std::array<FragmentName, 2>>& products) {
  Semantics sem(kind, 2);
  for (auto [f1, f2] : products) {
    FragmentSpec spec(sem, {f1, f2});
    auto pred = [](FragmentName f) {
      switch (f) {
        case FragmentName::H8: return in_H8;
        case FragmentName::Q8: return in_Q8;
        case FragmentName::C8: return in_C8;
        case FragmentName::Hntpp: return in_Hntpp;
        case FragmentName::Full: break;
      }
      return +[](Relation) { return true; };
    };
    for (Relation r1 : members_of(pred(f1))) {
      for (Relation r2 : members_of(pred(f2))) {
        SeqRelation r(sem, {r1, r2});
        if (!is_conv_consistent(r)) continue;
        if (!is_conv_consistent(H_S_refine(r, spec)))
          return {id, false,
                  std::string(fragment_name(f1)) + "x" + std::string(fragment_name(f2)) +
                      ": refinement of " + to_string(r) + " is not conv-consistent"};
      }
    }
  }
  return {std::move(id), true, ""};
}

}  // namespace detail

inline ClaimResult claim_neighbour_refinement_stability() {
  using F = FragmentName;
  return detail::refinement_stability_claim(
      "neighbour-refinement-stability", SemanticsKind::NeighbourInstants,
      {{F::Q8, F::Q8}, {F::Q8, F::H8}, {F::H8, F::Q8}});
}

inline ClaimResult claim_partition_refinement_stability() {
  using F = FragmentName;
  return detail::refinement_stability_claim(
      "partition-refinement-stability", SemanticsKind::TimePartition,
      {{F::H8, F::H8},
       {F::H8, F::Q8},
       {F::Q8, F::H8},
       {F::Q8, F::Q8},
       {F::H8, F::C8},
       {F::Q8, F::C8}});
}

inline ClaimResult claim_dominance_fragment_closure() {
  const std::string id = "dominance-fragment-closure";
  for (int bits = 0; bits < 256; ++bits) {
    Relation r = Relation::from_bits(static_cast<std::uint8_t>(bits));
    if (in_N(r)) continue;
    Relation up = project(ProjectionKind::DominanceUp, r);
    Relation down = project(ProjectionKind::DominanceDown, r);
    if (!in_H8(up))
      return {id, false, "dominance-up of " + to_string(r) + " = " + to_string(up) + " not in H8"};
    if (!in_H8(down) || !in_Q8(down) || !in_C8(down))
      return {id, false,
              "dominance-down of " + to_string(r) + " = " + to_string(down) +
                  " not in H8, Q8 and C8"};
  }
  return {id, true, ""};
}

inline ClaimResult claim_worked_closure_neighbour() {
  const std::string id = "worked-closure-neighbour";
  Semantics sem = Semantics::neighbour(3);
  SeqRelation r(sem, {TPP | NTPP | TPPI | NTPPI, PO | EQ, EC | DC});
  SeqRelation want(sem, {TPP | TPPI, PO, EC});
  SeqRelation got = projection_closure(r);
  bool ok = got == want;
  return {id, ok, ok ? "" : "got " + to_string(got) + ", want " + to_string(want)};
}

inline ClaimResult claim_worked_closure_partition() {
  const std::string id = "worked-closure-partition";
  Semantics sem = Semantics::partition(4);
  SeqRelation r(sem, {TPP | NTPP, PO | EQ, EC | DC, DC});
  SeqRelation want(sem, {TPP, PO, EC, DC});
  SeqRelation got = projection_closure(r);
  bool ok = got == want;
  return {id, ok, ok ? "" : "got " + to_string(got) + ", want " + to_string(want)};
}

/// Runs every claim in fixed order. Deterministic and side-effect free.
inline std::vector<ClaimResult> verify_all(const CompositionTable& table = composition_table()) {
  return {
      claim_counterexample_closure(table),
      claim_counterexample_consistent(table),
      claim_counterexample_unsat(table),
      claim_counterexample_eq_refinement(table),
      claim_counterexample_m2(table),
      claim_hntpp_subclass(table),
      claim_neighbour_fragment_exchange(),
      claim_neighbour_refinement_stability(),
      claim_partition_refinement_stability(),
      claim_dominance_fragment_closure(),
      claim_worked_closure_neighbour(),
      claim_worked_closure_partition(),
  };
}

inline std::string format_report(const std::vector<ClaimResult>& results) {
  std::string out;
  for (const ClaimResult& r : results) {
    out += r.id;
    out += r.pass ? " PASS" : " FAIL";
    if (!r.pass && !r.detail.empty()) out += " (" + r.detail + ")";
    out += '\n';
  }
  return out;
}

}  // namespace rcc8seq
