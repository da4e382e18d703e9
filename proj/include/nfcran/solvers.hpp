#pragma once

#include <string>

#include "nfcran/model.hpp"

namespace nfcran {

/// Both optimizers treat each task as a three-way choice {FEC, NEC, REJECT}
/// consuming vectors of resources — a multi-dimensional multiple-choice 0-1
/// knapsack with REJECT always admissible, so every instance has a feasible
/// solution (all-REJECT, objective 0).
///
/// Determinism contract: identical (scenario, config) produce identical
/// results, tie-breaks included. Ties always break toward the
/// lexicographically first decision vector, task order (cell_id, ue_index)
/// ascending with FEC < NEC < REJECT per task.
enum class SolverMode { EXACT, GREEDY, FEC_ONLY_EXACT, FEC_ONLY_GREEDY };

enum class GreedyScoring {
  /// Default. Score a placement by its normalized footprint: the sum over
  /// the target's resource dimensions of grant / remaining capacity. Tasks
  /// are processed in ascending order of their best footprint.
  MIN_FOOTPRINT,
  /// Toyoda-style aggregate penalty: grant vector dotted with current usage
  /// over remaining capacity, rebuilt after every placement; lowest penalty
  /// placed first.
  PENALTY,
};

inline constexpr int kDefaultExactTaskLimit = 20;
inline constexpr int kExactTaskHardCap = 25;

struct SolverConfig {
  SolverMode solver = SolverMode::GREEDY;
  int exact_task_limit = kDefaultExactTaskLimit;  // clamped to kExactTaskHardCap
  GreedyScoring greedy_scoring = GreedyScoring::MIN_FOOTPRINT;
};

/// Dispatches on config.solver.
AllocationResult solve(const Scenario& scenario, const SolverConfig& config);

/// Depth-first branch and bound over per-task choices, upper bound
/// accepted-so-far + remaining task count. Returns the true optimum; refuses
/// instances above the task limit (InstanceTooLargeError).
AllocationResult solve_exact(const Scenario& scenario, const SolverConfig& config);

/// Heuristic per config.greedy_scoring. Always returns an audit-clean
/// assignment; no optimality guarantee.
AllocationResult solve_greedy(const Scenario& scenario, const SolverConfig& config);

/// Same optimizers with NEC removed from every task's choice set — the
/// far-edge-only baseline. The scenario's fec_capacity is used as given;
/// any baseline capacity substitution is the experiment layer's job.
AllocationResult solve_fec_only(const Scenario& scenario, const SolverConfig& config);

/// Stable label, e.g. "greedy-min-footprint"; used in result files and CSV.
std::string solver_label(const SolverConfig& config);

bool solver_mode_from_string(const std::string& text, SolverMode& mode);
bool greedy_scoring_from_string(const std::string& text, GreedyScoring& scoring);

}  // namespace nfcran
