// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rcc8seq/rcc8seq.hpp"

using namespace rcc8seq;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

bool run_claims(const std::vector<ClaimResult>& results, std::string& detail) {
  for (const ClaimResult& r : results) {
    if (!r.pass) {
      detail = r.id + ": " + r.detail;
      return false;
    }
  }
  return true;
}

// --- criterion bodies -------------------------------------------------------

bool criterion_counterexample_closure(std::string& detail) {
  return run_claims({claim_counterexample_closure()}, detail);
}

bool criterion_incompleteness_witness(std::string& detail) {
  return run_claims({claim_counterexample_consistent(), claim_counterexample_unsat(),
                     claim_counterexample_eq_refinement(), claim_counterexample_m2()},
                    detail);
}

bool criterion_lemma_suites(std::string& detail) {
  if (!run_claims({claim_hntpp_subclass(), claim_neighbour_fragment_exchange(),
                   claim_neighbour_refinement_stability(), claim_partition_refinement_stability(),
                   claim_dominance_fragment_closure()},
                  detail))
    return false;

  // Suite sizes stay within 2^16 cases each.
  auto count_consistent_pairs = [](FragmentName f1, FragmentName f2, SemanticsKind kind) {
    Semantics sem(kind, 2);
    long cases = 0;
    for (Relation a : oracles::fragment_members(f1))
      for (Relation b : oracles::fragment_members(f2))
        if (is_conv_consistent(SeqRelation(sem, {a, b}))) ++cases;
    return cases;
  };
  long hn = static_cast<long>(oracles::fragment_members(FragmentName::Hntpp).size());
  long q8 = static_cast<long>(oracles::fragment_members(FragmentName::Q8).size());
  std::vector<std::pair<std::string, long>> suites;
  suites.emplace_back("hntpp-closure", hn * hn);
  suites.emplace_back("projection-exchange", q8 + hn);
  using K = SemanticsKind;
  using F = FragmentName;
  suites.emplace_back("neighbour-stability-q8q8", count_consistent_pairs(F::Q8, F::Q8, K::NeighbourInstants));
  suites.emplace_back("neighbour-stability-q8h8", count_consistent_pairs(F::Q8, F::H8, K::NeighbourInstants));
  suites.emplace_back("neighbour-stability-h8q8", count_consistent_pairs(F::H8, F::Q8, K::NeighbourInstants));
  for (F f1 : {F::H8, F::Q8})
    for (F f2 : {F::H8, F::Q8, F::C8})
      suites.emplace_back(std::string("partition-stability-") + std::string(fragment_name(f1)) +
                              std::string(fragment_name(f2)),
                          count_consistent_pairs(f1, f2, K::TimePartition));
  suites.emplace_back("dominance-closure", 256 - 72);
  for (const auto& [name, cases] : suites) {
    if (cases <= 0 || cases > 65536) {
      detail = name + " has " + std::to_string(cases) + " cases";
      return false;
    }
  }
  return true;
}

bool criterion_worked_examples(std::string& detail) {
  return run_claims({claim_worked_closure_neighbour(), claim_worked_closure_partition()}, detail);
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(20260808);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int nvars = 2 + static_cast<int>(rng() % 3);
    Network n = oracles::random_covered_pattern_network(rng, nvars);
    TractableVerdict verdict = decide_tractable(n);
    if (verdict == TractableVerdict::NotCovered) {
      detail = "pattern generator produced an uncovered network (trial " +
               std::to_string(trial) + ")";
      return false;
    }
    bool oracle_sat = !brute_force_scenarios(n, 1).empty();
    if ((verdict == TractableVerdict::Sat) != oracle_sat) {
      detail = "tractable-pattern discrepancy on trial " + std::to_string(trial) + ": " +
               format_network(n);
      return false;
    }
    ++(oracle_sat ? sat : unsat);
  }
  if (sat == 0 || unsat == 0) {
    detail = "degenerate pattern sample: " + std::to_string(sat) + " sat / " +
             std::to_string(unsat) + " unsat";
    return false;
  }

  sat = unsat = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Semantics sem = oracles::random_semantics(rng);
    int nvars = 2 + static_cast<int>(rng() % 3);
    Network n = oracles::random_network(sem, nvars, rng);
    bool search_sat = find_closed_scenario(n).has_value();
    bool oracle_sat = !brute_force_scenarios(n, 1).empty();
    if (search_sat != oracle_sat) {
      detail = "search/oracle discrepancy on trial " + std::to_string(trial) + ": " +
               format_network(n);
      return false;
    }
    ++(oracle_sat ? sat : unsat);
  }
  if (sat == 0 || unsat == 0) {
    detail = "degenerate unrestricted sample: " + std::to_string(sat) + " sat / " +
             std::to_string(unsat) + " unsat";
    return false;
  }
  return true;
}

bool criterion_algebra_sanity(std::string& detail) {
  ValidationReport report = validate_table(composition_table());
  if (!report.ok) {
    detail = "table validation failed: " + report.detail;
    return false;
  }
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    Semantics sem = oracles::random_semantics(rng);
    int nvars = 2 + static_cast<int>(rng() % 3);
    Network n = oracles::random_network(sem, nvars, rng);
    Network closed = algebraic_closure(n);
    if (!(algebraic_closure(closed) == closed)) {
      detail = "closure is not idempotent on trial " + std::to_string(trial);
      return false;
    }
    if (!(algebraic_closure(n, composition_table(), 1 + rng()) == closed)) {
      detail = "closure depends on the schedule on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool criterion_refinement_law(std::string& detail) {
  for (int bits = 1; bits < 256; ++bits) {
    Relation r = Relation::from_bits(static_cast<std::uint8_t>(bits));
    if ((in_H8(r) || in_Q8(r)) && !(h_H8(r).is_basic() && h_H8(r).subset_of(r))) {
      detail = "h_H8 fails on " + to_string(r);
      return false;
    }
    if (in_C8(r) && !(h_C8(r).is_basic() && h_C8(r).subset_of(r))) {
      detail = "h_C8 fails on " + to_string(r);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"counterexample closure reproduced bit-exactly", 1.0, criterion_counterexample_closure},
      {"incompleteness witness: consistent closures without closed scenarios", 10.0,
       criterion_incompleteness_witness},
      {"exhaustive lemma suites", 5.0, criterion_lemma_suites},
      {"worked projection-closure examples", 5.0, criterion_worked_examples},
      {"solver/oracle agreement on 2x1000 random networks", 300.0, criterion_oracle_equivalence},
      {"composition-table validation and closure schedule independence", 300.0,
       criterion_algebra_sanity},
      {"h refinements collapse H8/Q8 and C8 members to basics", 5.0, criterion_refinement_law},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
                std::to_string(c.limit_seconds) + "s budget";
    }
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << c.name << " ... " << (ok ? "PASS" : "FAIL")
         << " (" << std::fixed;
    line.precision(2);
    line << seconds << "s)";
    std::cout << line.str() << "\n";
    if (!ok) {
      if (!detail.empty()) std::cout << "  detail: " << detail << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
