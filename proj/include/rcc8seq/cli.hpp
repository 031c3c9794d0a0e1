#pragma once

#include <iostream>

#include "CLI11.hpp"
#include "rcc8seq/planner.hpp"
#include "rcc8seq/qcn_io.hpp"
#include "rcc8seq/verify.hpp"

namespace rcc8seq {

/// Batch front-end. Exit codes: 0 success/SAT, 1 UNSAT, 2 usage or parse
/// error, 3 verification failure.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoner for temporal sequences of RCC8 relations", "rcc8seq"};
  app.require_subcommand(1);

  std::string closure_file;
  CLI::App* closure_cmd =
      app.add_subcommand("closure", "print the algebraically closed network");
  closure_cmd->add_option("file", closure_file, "network file")->required();

  std::string classify_file;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "report fragment membership and tractable patterns");
  classify_cmd->add_option("file", classify_file, "network file")->required();

  std::string solve_file;
  bool force_search = false;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "decide weak satisfiability and print a witness scenario");
  solve_cmd->add_option("file", solve_file, "network file")->required();
  solve_cmd->add_flag("--force-search", force_search,
                      "skip the tractable-pattern shortcut and always search");

  std::string plan_start, plan_goal, plan_constraints, plan_semantics;
  int plan_steps = 0;
  CLI::App* plan_cmd = app.add_subcommand(
      "plan", "find an evolution between two topological scenarios");
  plan_cmd->add_option("--start", plan_start, "start scenario file (length 1)")->required();
  plan_cmd->add_option("--goal", plan_goal, "goal scenario file (length 1)")->required();
  plan_cmd->add_option("--steps", plan_steps, "sequence length")->required();
  plan_cmd->add_option("--constraints", plan_constraints,
                       "classical constraint network applied at every index");
  plan_cmd->add_option("--semantics", plan_semantics, "neighbour or partition")
      ->required()
      ->check(CLI::IsMember({"neighbour", "partition"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "machine-check the documented closure and lemma suite");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (closure_cmd->parsed()) {
      out << format_network(algebraic_closure(parse_network_file(closure_file)));
      return 0;
    }
    if (classify_cmd->parsed()) {
      out << to_string(classify(parse_network_file(classify_file)));
      return 0;
    }
    if (solve_cmd->parsed()) {
      Network n = parse_network_file(solve_file);
      std::optional<Network> witness;
      if (!force_search && decide_tractable(n) == TractableVerdict::Unsat) {
        out << "UNSAT\n";
        return 1;
      }
      witness = find_closed_scenario(n);
      if (!witness) {
        out << "UNSAT\n";
        return 1;
      }
      out << "SAT\n" << format_network(*witness);
      return 0;
    }
    if (plan_cmd->parsed()) {
      Network start = parse_network_file(plan_start);
      Network goal = parse_network_file(plan_goal);
      std::optional<Network> constraints;
      if (!plan_constraints.empty()) constraints = parse_network_file(plan_constraints);
      SemanticsKind kind = plan_semantics == "neighbour" ? SemanticsKind::NeighbourInstants
                                                         : SemanticsKind::TimePartition;
      std::optional<Network> witness;
      try {
        witness = plan(start, goal, plan_steps, constraints ? &*constraints : nullptr, kind);
      } catch (const InfeasibleEndpoints& e) {
        err << e.what() << "\n";
        out << "UNSAT\n";
        return 1;
      }
      if (!witness) {
        out << "UNSAT\n";
        return 1;
      }
      out << "SAT\n" << format_network(*witness);
      return 0;
    }
    if (verify_cmd->parsed()) {
      std::vector<ClaimResult> results = verify_all();
      out << format_report(results);
      for (const ClaimResult& r : results)
        if (!r.pass) return 3;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rcc8seq
