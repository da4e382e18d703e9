#include "nfcran/constraints.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nfcran/errors.hpp"

namespace nfcran {

namespace {

void require_positive_finite(const char* op, const char* field, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream out;
    out << op << ": " << field << " must be > 0 and finite (got " << value << ")";
    throw std::invalid_argument(out.str());
  }
}

void require_nonnegative_finite(const char* op, const char* field, double value) {
  if (value < 0.0 || !std::isfinite(value)) {
    std::ostringstream out;
    out << op << ": " << field << " must be >= 0 and finite (got " << value << ")";
    throw std::invalid_argument(out.str());
  }
}

}  // namespace

const char* to_string(Target target) {
  return target == Target::FEC ? "FEC" : "NEC";
}

const char* to_string(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::C1: return "C1";
    case ConstraintTag::C2: return "C2";
    case ConstraintTag::C3: return "C3";
    case ConstraintTag::C4: return "C4";
    case ConstraintTag::C5: return "C5";
    case ConstraintTag::C6: return "C6";
    case ConstraintTag::C7: return "C7";
  }
  return "?";
}

double fec_latency(const TaskSpec& task, const UeLink& link) {
  require_nonnegative_finite("fec_latency", "data_size", task.data_size);
  require_nonnegative_finite("fec_latency", "compute_demand", task.compute_demand);
  require_positive_finite("fec_latency", "wireless_rate", link.wireless_rate);
  require_positive_finite("fec_latency", "fronthaul_rate", link.fronthaul_rate);
  require_positive_finite("fec_latency", "fec_cpu_grant", link.fec_cpu_grant);
  return task.data_size / link.wireless_rate +
         task.data_size / link.fronthaul_rate +
         task.compute_demand / link.fec_cpu_grant;
}

double nec_latency(const TaskSpec& task, const UeLink& link) {
  require_nonnegative_finite("nec_latency", "data_size", task.data_size);
  require_nonnegative_finite("nec_latency", "compute_demand", task.compute_demand);
  require_positive_finite("nec_latency", "wireless_rate", link.wireless_rate);
  require_positive_finite("nec_latency", "nec_cpu_grant", link.nec_cpu_grant);
  return task.data_size / link.wireless_rate +
         task.compute_demand / link.nec_cpu_grant;
}

bool is_task_feasible_on(Target target, const TaskSpec& task, const UeLink& link) {
  const double latency =
      target == Target::FEC ? fec_latency(task, link) : nec_latency(task, link);
  return leq_within_slack(latency, task.deadline);
}

ResourceUsage compute_usage(const Scenario& scenario, const Assignment& assignment) {
  ResourceUsage usage;
  for (const CellSpec& cell : scenario.cells) {
    usage.nec_cycles_per_s[cell.cell_id] = 0.0;
    usage.fronthaul_bits_per_s[cell.cell_id] = 0.0;
  }
  // canonical_tasks orders by (cell_id, ue_index); summation order is fixed.
  for (const TaskRef& task : canonical_tasks(scenario)) {
    switch (assignment.at(task.key)) {
      case Decision::FEC:
        usage.fec_cycles_per_s += task.link->fec_cpu_grant;
        usage.fronthaul_bits_per_s[task.key.cell_id] += task.link->fronthaul_rate;
        break;
      case Decision::NEC:
        usage.nec_cycles_per_s[task.key.cell_id] += task.link->nec_cpu_grant;
        break;
      case Decision::REJECT:
        break;
    }
  }
  return usage;
}

ConstraintReport audit(const Scenario& scenario, const Assignment& assignment) {
  const std::vector<TaskRef> tasks = canonical_tasks(scenario);
  if (assignment.decisions().size() != tasks.size()) {
    throw TaskSetMismatchError(
        "audit: assignment has " + std::to_string(assignment.decisions().size()) +
        " decisions for " + std::to_string(tasks.size()) + " tasks");
  }

  ConstraintReport report;

  // C1/C2: per accepted task, latency against deadline. Assignment::at
  // throws TaskSetMismatchError if a key is missing, which with the size
  // check above makes key-set equality total.
  for (const TaskRef& task : tasks) {
    switch (assignment.at(task.key)) {
      case Decision::FEC: {
        const double latency = fec_latency(*task.task, *task.link);
        if (!leq_within_slack(latency, task.task->deadline)) {
          report.violations.push_back({ConstraintTag::C1, task.key.cell_id,
                                       task.key.ue_index, latency,
                                       task.task->deadline});
        }
        break;
      }
      case Decision::NEC: {
        const double latency = nec_latency(*task.task, *task.link);
        if (!leq_within_slack(latency, task.task->deadline)) {
          report.violations.push_back({ConstraintTag::C2, task.key.cell_id,
                                       task.key.ue_index, latency,
                                       task.task->deadline});
        }
        break;
      }
      case Decision::REJECT:
        break;
    }
  }

  const ResourceUsage usage = compute_usage(scenario, assignment);

  // C3: shared far-edge CPU pool.
  if (!leq_within_slack(usage.fec_cycles_per_s, scenario.fec_capacity)) {
    report.violations.push_back({ConstraintTag::C3, std::nullopt, std::nullopt,
                                 usage.fec_cycles_per_s, scenario.fec_capacity});
  }

  // C4/C5: per-cell near-edge CPU and fronthaul rate.
  for (const CellSpec& cell : scenario.cells) {
    const double nec_used = usage.nec_cycles_per_s.at(cell.cell_id);
    if (!leq_within_slack(nec_used, cell.nec_capacity)) {
      report.violations.push_back({ConstraintTag::C4, cell.cell_id, std::nullopt,
                                   nec_used, cell.nec_capacity});
    }
    const double fronthaul_used = usage.fronthaul_bits_per_s.at(cell.cell_id);
    if (!leq_within_slack(fronthaul_used, cell.fronthaul_capacity)) {
      report.violations.push_back({ConstraintTag::C5, cell.cell_id, std::nullopt,
                                   fronthaul_used, cell.fronthaul_capacity});
    }
  }

  // C6/C7 hold by construction: Assignment stores one of {FEC, NEC, REJECT}
  // per task, which encodes (a, b) in {(1,0), (0,1), (0,0)}.
  return report;
}

double success_rate(const Scenario& scenario, const Assignment& assignment) {
  const ConstraintReport report = audit(scenario, assignment);
  if (!report.feasible()) {
    throw InfeasibleAssignmentError(
        "success_rate: assignment is infeasible (" +
        std::to_string(report.violations.size()) +
        " violation(s)); the rate of an infeasible allocation is undefined");
  }
  const int total = total_task_count(scenario);
  if (total <= 0) {
    throw std::invalid_argument("success_rate: scenario has no tasks");
  }
  return static_cast<double>(assignment.accepted_count()) /
         static_cast<double>(total);
}

}  // namespace nfcran
