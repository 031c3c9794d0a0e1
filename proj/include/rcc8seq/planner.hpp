#pragma once

#include "rcc8seq/fragments.hpp"
#include "rcc8seq/solver.hpp"

namespace rcc8seq {

struct VariableMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A start or goal scenario violates the stated constraints at its own index.
struct InfeasibleEndpoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_classical(const Network& n, const char* role) {
  if (n.semantics().length() != 1)
    throw std::invalid_argument(std::string(role) + " must be a single-instant network");
}

inline void check_classical_scenario(const Network& n, const char* role) {
  check_classical(n, role);
  if (!n.is_scenario())
    throw std::invalid_argument(std::string(role) + " must be a scenario (basic relations only)");
}

}  // namespace detail

/// Decide whether the classical scenario `start` can evolve into `goal`
/// within a sequence of `steps` indices under the given semantics, with every
/// index slice refining `constraints` (when supplied; its variables must all
/// occur in the scenarios). Returns the full witness sequence scenario, or
/// nothing when no admissible evolution exists.
///
/// At neighbouring instants the goal sits at the last index. Over a time
/// partition `steps` must be even, the goal sits at the last instant
/// position steps-1, and the trailing open interval is constrained only by
/// the projections and `constraints`.
inline std::optional<Network> plan(const Network& start, const Network& goal, int steps,
                                   const std::vector<const Network*>& constraints_per_index,
                                   SemanticsKind kind,
                                   const CompositionTable& table = composition_table()) {
  detail::check_classical_scenario(start, "start");
  detail::check_classical_scenario(goal, "goal");
  if (start.vars() != goal.vars())
    throw VariableMismatch("start and goal scenarios name different variables");

  Semantics sem(kind, steps);
  const int goal_index = kind == SemanticsKind::TimePartition ? steps - 1 : steps;
  if (!constraints_per_index.empty() &&
      static_cast<int>(constraints_per_index.size()) != steps)
    throw std::invalid_argument("need one constraint network per index");

  Network net(sem, start.vars());

  auto narrow_slice = [&](const Network& classical, int index) {
    for (int x = 0; x < classical.var_count(); ++x) {
      for (int y = x + 1; y < classical.var_count(); ++y) {
        int nx = net.var_index(classical.var_name(x));
        int ny = net.var_index(classical.var_name(y));
        SeqRelation r = net.rel(nx, ny);
        r.set(index, r.at(index) & classical.rel(x, y).at(1));
        net.set_rel(nx, ny, r);
      }
    }
  };

  for (int i = 1; i <= steps && !constraints_per_index.empty(); ++i) {
    const Network* c = constraints_per_index[static_cast<std::size_t>(i - 1)];
    if (c == nullptr) continue;
    detail::check_classical(*c, "constraints");
    for (const std::string& v : c->vars())
      if (!net.has_var(v))
        throw VariableMismatch("constraint variable '" + v + "' is not a scenario variable");
    narrow_slice(*c, i);
  }

  // Endpoint feasibility against the constraints at the pinned index. A
  // conflict between start and goal themselves is not an error, just an
  // unsatisfiable instance.
  auto check_endpoint = [&](const Network& endpoint, int index, const char* role) {
    for (int x = 0; x < endpoint.var_count(); ++x)
      for (int y = x + 1; y < endpoint.var_count(); ++y) {
        int nx = net.var_index(endpoint.var_name(x));
        int ny = net.var_index(endpoint.var_name(y));
        if ((net.rel(nx, ny).at(index) & endpoint.rel(x, y).at(1)).empty())
          throw InfeasibleEndpoints(std::string(role) + " violates the constraints for pair " +
                                    endpoint.var_name(x) + " " + endpoint.var_name(y));
      }
  };
  check_endpoint(start, 1, "start");
  check_endpoint(goal, goal_index, "goal");
  narrow_slice(start, 1);
  narrow_slice(goal, goal_index);

  if (decide_tractable(net, table) == TractableVerdict::Unsat) return std::nullopt;
  return find_closed_scenario(net, table);
}

/// Same constraint network applied at every index (or none).
inline std::optional<Network> plan(const Network& start, const Network& goal, int steps,
                                   const Network* constraints, SemanticsKind kind,
                                   const CompositionTable& table = composition_table()) {
  std::vector<const Network*> per_index;
  if (constraints != nullptr)
    per_index.assign(static_cast<std::size_t>(steps), constraints);
  return plan(start, goal, steps, per_index, kind, table);
}

}  // namespace rcc8seq
