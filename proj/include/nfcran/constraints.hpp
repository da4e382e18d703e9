#pragma once

#include <optional>
#include <vector>

#include "nfcran/model.hpp"

namespace nfcran {

/// Absolute slack applied to every <= comparison, in the constraint's own
/// units. Keeps pure-float summation order from flipping feasibility.
inline constexpr double kConstraintSlack = 1e-9;

inline bool leq_within_slack(double measured, double bound) {
  return measured <= bound + kConstraintSlack;
}

enum class Target { FEC, NEC };

const char* to_string(Target target);

/// Far-edge completion time: wireless upload, fronthaul forward, execution.
///   data/wireless_rate + data/fronthaul_rate + compute/fec_cpu_grant
double fec_latency(const TaskSpec& task, const UeLink& link);

/// Near-edge completion time: wireless upload, execution.
///   data/wireless_rate + compute/nec_cpu_grant
double nec_latency(const TaskSpec& task, const UeLink& link);

/// Does the task meet its deadline on the given target (C1 / C2)?
bool is_task_feasible_on(Target target, const TaskSpec& task, const UeLink& link);

/// Constraint tags of the allocation problem:
///   C1 FEC deadline      (per task)
///   C2 NEC deadline      (per task)
///   C3 far-edge CPU pool (global)
///   C4 near-edge CPU     (per cell)
///   C5 fronthaul rate    (per cell)
///   C6/C7 one executor per task, binary decisions (hold by construction
///   of Assignment and are reported as structurally satisfied)
enum class ConstraintTag { C1, C2, C3, C4, C5, C6, C7 };

const char* to_string(ConstraintTag tag);

struct ConstraintViolation {
  ConstraintTag constraint = ConstraintTag::C1;
  std::optional<int> cell_id;   // set for C1/C2/C4/C5
  std::optional<int> ue_index;  // set for C1/C2
  double measured = 0.0;
  double bound = 0.0;
};

struct ConstraintReport {
  std::vector<ConstraintViolation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Sums every resource dimension over the accepted tasks in canonical
/// (cell_id, ue_index) order. Solvers and the audit share this definition, so
/// their sums are bit-identical.
ResourceUsage compute_usage(const Scenario& scenario, const Assignment& assignment);

/// Evaluates C1..C5 and reports every violation. C6/C7 cannot be violated by
/// a well-formed Assignment. Throws TaskSetMismatchError when the assignment
/// keys differ from the scenario's task set.
ConstraintReport audit(const Scenario& scenario, const Assignment& assignment);

/// Accepted tasks divided by all tasks. Defined only for feasible
/// assignments; throws InfeasibleAssignmentError otherwise.
double success_rate(const Scenario& scenario, const Assignment& assignment);

}  // namespace nfcran
