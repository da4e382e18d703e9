#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace nfcran::testing {

namespace {

// The tolerance is part of the artifact's feasibility definition, so the
// oracle applies the same absolute slack as the production audit.
constexpr double kSlack = 1e-9;

struct FlatTask {
  int cell_id = 0;
  double data_size = 0.0;
  double compute_demand = 0.0;
  double deadline = 0.0;
  double wireless_rate = 0.0;
  double fronthaul_rate = 0.0;
  double nec_cpu_grant = 0.0;
  double fec_cpu_grant = 0.0;
};

std::vector<FlatTask> flatten(const Scenario& scenario) {
  std::vector<FlatTask> tasks;
  for (const TaskRef& ref : canonical_tasks(scenario)) {
    tasks.push_back(FlatTask{ref.key.cell_id, ref.task->data_size,
                             ref.task->compute_demand, ref.task->deadline,
                             ref.link->wireless_rate, ref.link->fronthaul_rate,
                             ref.link->nec_cpu_grant, ref.link->fec_cpu_grant});
  }
  return tasks;
}

bool feasible(const Scenario& scenario, const std::vector<FlatTask>& tasks,
              const std::vector<Decision>& decisions) {
  double fec_used = 0.0;
  std::map<int, double> nec_used;
  std::map<int, double> fronthaul_used;

  for (size_t i = 0; i < tasks.size(); ++i) {
    const FlatTask& t = tasks[i];
    if (decisions[i] == Decision::FEC) {
      const double latency = t.data_size / t.wireless_rate +
                             t.data_size / t.fronthaul_rate +
                             t.compute_demand / t.fec_cpu_grant;
      if (latency > t.deadline + kSlack) return false;
      fec_used += t.fec_cpu_grant;
      fronthaul_used[t.cell_id] += t.fronthaul_rate;
    } else if (decisions[i] == Decision::NEC) {
      const double latency =
          t.data_size / t.wireless_rate + t.compute_demand / t.nec_cpu_grant;
      if (latency > t.deadline + kSlack) return false;
      nec_used[t.cell_id] += t.nec_cpu_grant;
    }
  }

  if (fec_used > scenario.fec_capacity + kSlack) return false;
  for (const CellSpec& cell : scenario.cells) {
    if (nec_used[cell.cell_id] > cell.nec_capacity + kSlack) return false;
    if (fronthaul_used[cell.cell_id] > cell.fronthaul_capacity + kSlack) return false;
  }
  return true;
}

}  // namespace

bool oracle_feasible(const Scenario& scenario, const std::vector<Decision>& decisions) {
  const std::vector<FlatTask> tasks = flatten(scenario);
  if (decisions.size() != tasks.size()) {
    throw std::invalid_argument("oracle_feasible: decision count mismatch");
  }
  return feasible(scenario, tasks, decisions);
}

OracleOutcome enumerate_best(const Scenario& scenario, bool allow_nec) {
  const std::vector<FlatTask> tasks = flatten(scenario);
  const size_t n = tasks.size();
  if (n > 16) {
    throw std::invalid_argument("enumerate_best: instance too large to enumerate");
  }

  // Digits in FEC < NEC < REJECT order; the odometer below visits decision
  // vectors in exactly lexicographic order.
  const std::vector<Decision> choices =
      allow_nec ? std::vector<Decision>{Decision::FEC, Decision::NEC, Decision::REJECT}
                : std::vector<Decision>{Decision::FEC, Decision::REJECT};
  const size_t base = choices.size();

  OracleOutcome outcome;
  std::vector<size_t> digits(n, 0);
  std::vector<Decision> decisions(n, choices[0]);

  while (true) {
    for (size_t i = 0; i < n; ++i) decisions[i] = choices[digits[i]];

    if (feasible(scenario, tasks, decisions)) {
      ++outcome.feasible_count;
      int accepted = 0;
      for (const Decision d : decisions) {
        if (d != Decision::REJECT) ++accepted;
      }
      if (accepted > outcome.best_objective) {
        outcome.best_objective = accepted;
        outcome.best_decisions = decisions;
      }
    }

    // Advance the odometer, least significant digit last.
    size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < base) break;
      digits[pos] = 0;
      if (pos == 0) return outcome;
    }
    if (n == 0) return outcome;
  }
}

}  // namespace nfcran::testing
