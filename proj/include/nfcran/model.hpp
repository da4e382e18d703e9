#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nfcran {

// All quantities are stored in base SI units (cycles, bits, seconds and their
// per-second rates) as doubles. Magnitudes in generated scenarios span roughly
// 1e4..1e16, well inside double precision; a single unit convention avoids
// M/G-prefix mistakes.

/// One offloadable task: cycles to execute, bits to move, completion deadline.
struct TaskSpec {
  double compute_demand = 0.0;  // cycles
  double data_size = 0.0;       // bits
  double deadline = 0.0;        // seconds
};

/// Per-UE link parameters and CPU grants. These are given inputs of an
/// instance, not decision variables.
struct UeLink {
  double wireless_rate = 0.0;   // bits/s, UE -> radio head
  double fronthaul_rate = 0.0;  // bits/s, radio head -> far-edge cloud
  double nec_cpu_grant = 0.0;   // cycles/s the cell's near-edge cloud would allocate
  double fec_cpu_grant = 0.0;   // cycles/s the far-edge cloud would allocate
};

struct UeEntry {
  TaskSpec task;
  UeLink link;
};

/// One cell: a radio head with its near-edge cloud and fronthaul link.
/// The UE index is the position in `ues`.
struct CellSpec {
  int cell_id = 0;
  double nec_capacity = 0.0;        // cycles/s
  double fronthaul_capacity = 0.0;  // bits/s
  std::vector<UeEntry> ues;
};

struct ScenarioMetadata {
  std::uint64_t seed = 0;
  std::string preset = "unknown";
};

/// A full problem instance. The far-edge cloud is shared by all cells; each
/// UE belongs to exactly one cell (it is served only by its nearest radio
/// head, so cross-cell choices do not exist structurally).
struct Scenario {
  double fec_capacity = 0.0;  // cycles/s, shared far-edge pool
  std::vector<CellSpec> cells;
  ScenarioMetadata metadata;
};

/// Identifies one task as (cell_id, position of the UE in its cell).
struct TaskKey {
  int cell_id = 0;
  int ue_index = 0;
  auto operator<=>(const TaskKey&) const = default;
};

std::string to_string(const TaskKey& key);

int total_task_count(const Scenario& scenario);

/// Checks every structural invariant (positivity, finiteness, non-empty
/// lists, unique cell ids). Violations are returned as data, one message
/// each; an empty result means the scenario is well-formed.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// Flat view over a scenario's tasks in (cell_id, ue_index) order. This is
/// the canonical iteration order used everywhere sums or tie-breaks matter.
struct TaskRef {
  TaskKey key;
  const TaskSpec* task = nullptr;
  const UeLink* link = nullptr;
  const CellSpec* cell = nullptr;
};

std::vector<TaskRef> canonical_tasks(const Scenario& scenario);

/// Where a task runs. REJECT is an explicit decision, not an absent entry,
/// so "at most one executor per task" is unrepresentable-invalid.
enum class Decision { FEC, NEC, REJECT };

const char* to_string(Decision decision);

/// Total map task -> decision over one scenario's task set. Construction
/// rejects missing, extra, or duplicated keys.
class Assignment {
 public:
  static Assignment for_scenario(
      const Scenario& scenario,
      const std::vector<std::pair<TaskKey, Decision>>& decisions);
  static Assignment all_reject(const Scenario& scenario);

  const std::map<TaskKey, Decision>& decisions() const { return decisions_; }
  Decision at(const TaskKey& key) const;
  int accepted_count() const;

 private:
  Assignment() = default;
  std::map<TaskKey, Decision> decisions_;
};

/// Resource consumption of an assignment, per dimension. Per-cell entries are
/// keyed by cell_id and present for every cell, used or not.
struct ResourceUsage {
  double fec_cycles_per_s = 0.0;
  std::map<int, double> nec_cycles_per_s;
  std::map<int, double> fronthaul_bits_per_s;
};

/// Solver output. `solve_time_s` is wall clock and informational only; it is
/// deliberately left out of the serialized form so identical inputs produce
/// byte-identical files.
struct AllocationResult {
  Assignment assignment;
  int objective = 0;          // accepted task count
  double success_rate = 0.0;  // objective / total task count
  ResourceUsage usage;
  std::string solver_name;
  double solve_time_s = 0.0;
};

}  // namespace nfcran
