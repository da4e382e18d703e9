#include "nfcran/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "nfcran/errors.hpp"

namespace nfcran {

namespace {

bool finite(double v) { return std::isfinite(v); }

std::string num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void check_positive(std::vector<std::string>& issues, const std::string& where,
                    const char* field, double value) {
  if (!(value > 0.0) || !finite(value)) {
    issues.push_back(where + ": " + field + " must be > 0 and finite (got " +
                     num(value) + ")");
  }
}

void check_nonnegative(std::vector<std::string>& issues, const std::string& where,
                       const char* field, double value) {
  if (value < 0.0 || !finite(value)) {
    issues.push_back(where + ": " + field + " must be >= 0 and finite (got " +
                     num(value) + ")");
  }
}

}  // namespace

std::string to_string(const TaskKey& key) {
  std::ostringstream out;
  out << "(cell " << key.cell_id << ", ue " << key.ue_index << ")";
  return out.str();
}

int total_task_count(const Scenario& scenario) {
  int count = 0;
  for (const CellSpec& cell : scenario.cells) {
    count += static_cast<int>(cell.ues.size());
  }
  return count;
}

std::vector<std::string> validate_scenario(const Scenario& scenario) {
  std::vector<std::string> issues;

  if (scenario.cells.empty()) issues.push_back("scenario: cells list is empty");
  check_nonnegative(issues, "scenario", "fec_capacity", scenario.fec_capacity);

  std::set<int> seen_cell_ids;
  for (const CellSpec& cell : scenario.cells) {
    const std::string where = "cell " + std::to_string(cell.cell_id);
    if (!seen_cell_ids.insert(cell.cell_id).second) {
      issues.push_back(where + ": duplicate cell_id");
    }
    check_nonnegative(issues, where, "nec_capacity", cell.nec_capacity);
    check_nonnegative(issues, where, "fronthaul_capacity", cell.fronthaul_capacity);
    if (cell.ues.empty()) issues.push_back(where + ": ues list is empty");

    for (int i = 0; i < static_cast<int>(cell.ues.size()); ++i) {
      const UeEntry& ue = cell.ues[static_cast<size_t>(i)];
      const std::string task_where = to_string(TaskKey{cell.cell_id, i});
      check_positive(issues, task_where, "compute_demand", ue.task.compute_demand);
      check_positive(issues, task_where, "data_size", ue.task.data_size);
      check_positive(issues, task_where, "deadline", ue.task.deadline);
      check_positive(issues, task_where, "wireless_rate", ue.link.wireless_rate);
      check_positive(issues, task_where, "fronthaul_rate", ue.link.fronthaul_rate);
      check_positive(issues, task_where, "nec_cpu_grant", ue.link.nec_cpu_grant);
      check_positive(issues, task_where, "fec_cpu_grant", ue.link.fec_cpu_grant);
    }
  }
  // (cell_id, ue_index) uniqueness follows from unique cell ids: the ue index
  // is the position inside its cell, so it cannot repeat within one cell.
  return issues;
}

std::vector<TaskRef> canonical_tasks(const Scenario& scenario) {
  std::vector<TaskRef> tasks;
  tasks.reserve(static_cast<size_t>(total_task_count(scenario)));
  for (const CellSpec& cell : scenario.cells) {
    for (int i = 0; i < static_cast<int>(cell.ues.size()); ++i) {
      const UeEntry& ue = cell.ues[static_cast<size_t>(i)];
      tasks.push_back(TaskRef{TaskKey{cell.cell_id, i}, &ue.task, &ue.link, &cell});
    }
  }
  std::sort(tasks.begin(), tasks.end(),
            [](const TaskRef& a, const TaskRef& b) { return a.key < b.key; });
  return tasks;
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::FEC: return "FEC";
    case Decision::NEC: return "NEC";
    case Decision::REJECT: return "REJECT";
  }
  return "?";
}

Assignment Assignment::for_scenario(
    const Scenario& scenario,
    const std::vector<std::pair<TaskKey, Decision>>& decisions) {
  Assignment assignment;
  for (const auto& [key, decision] : decisions) {
    if (!assignment.decisions_.emplace(key, decision).second) {
      throw TaskSetMismatchError("assignment: duplicate decision for task " +
                                 to_string(key));
    }
  }
  const std::vector<TaskRef> tasks = canonical_tasks(scenario);
  if (assignment.decisions_.size() != tasks.size()) {
    throw TaskSetMismatchError(
        "assignment: expected " + std::to_string(tasks.size()) +
        " decisions, got " + std::to_string(assignment.decisions_.size()));
  }
  auto it = assignment.decisions_.begin();
  for (const TaskRef& task : tasks) {
    if (it->first != task.key) {
      throw TaskSetMismatchError("assignment: no decision for task " +
                                 to_string(task.key));
    }
    ++it;
  }
  return assignment;
}

Assignment Assignment::all_reject(const Scenario& scenario) {
  std::vector<std::pair<TaskKey, Decision>> decisions;
  for (const TaskRef& task : canonical_tasks(scenario)) {
    decisions.emplace_back(task.key, Decision::REJECT);
  }
  return for_scenario(scenario, decisions);
}

Decision Assignment::at(const TaskKey& key) const {
  const auto it = decisions_.find(key);
  if (it == decisions_.end()) {
    throw TaskSetMismatchError("assignment: no decision for task " + to_string(key));
  }
  return it->second;
}

int Assignment::accepted_count() const {
  int count = 0;
  for (const auto& [key, decision] : decisions_) {
    if (decision != Decision::REJECT) ++count;
  }
  return count;
}

}  // namespace nfcran
