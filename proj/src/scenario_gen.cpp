#include "nfcran/scenario_gen.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nfcran/rng.hpp"

namespace nfcran {

namespace {

void check_range(std::vector<std::string>& issues, const char* name,
                 const Range& range) {
  if (!(range.low > 0.0) || !std::isfinite(range.low) ||
      !std::isfinite(range.high)) {
    issues.push_back(std::string(name) + ": low must be > 0 and both ends finite");
  }
  if (range.low > range.high) {
    issues.push_back(std::string(name) + ": low > high");
  }
}

}  // namespace

GenParams paper_preset() {
  GenParams p;
  p.cell_count = 5;
  p.ues_per_cell = 0;  // caller decides the offered load
  p.deadline = 3.0;
  p.data_size = {1e6, 1e9};
  p.compute_demand = {1e6, 1e9};
  p.wireless_rate = {1e9, 1e10};
  p.fronthaul_rate = {1e9, 1e10};
  p.nec_cpu_grant = {1e9, 1e10};
  p.fec_cpu_grant = {1e11, 1e12};
  p.nec_capacity = {1e11, 1e12};
  p.fronthaul_capacity = {1e12, 1e13};
  p.fec_capacity = 1e14;
  p.preset = "paper";
  return p;
}

GenParams positioning_preset() {
  GenParams p = paper_preset();
  // One nominal task is a 25 s fingerprint window at 200 B/s = 4e4 bits; the
  // top end covers multi-UE aggregation of the same stream.
  p.data_size = {kPositioningNominalStreamBits, 100.0 * kPositioningNominalStreamBits};
  p.deadline = 1.0;
  p.preset = "positioning";
  return p;
}

std::vector<std::string> validate_params(const GenParams& params) {
  std::vector<std::string> issues;
  if (params.cell_count < 1) issues.push_back("cell_count must be >= 1");
  if (params.ues_per_cell < 1) issues.push_back("ues_per_cell must be >= 1");
  if (!(params.deadline > 0.0) || !std::isfinite(params.deadline)) {
    issues.push_back("deadline must be > 0 and finite");
  }
  check_range(issues, "data_size", params.data_size);
  check_range(issues, "compute_demand", params.compute_demand);
  check_range(issues, "wireless_rate", params.wireless_rate);
  check_range(issues, "fronthaul_rate", params.fronthaul_rate);
  check_range(issues, "nec_cpu_grant", params.nec_cpu_grant);
  check_range(issues, "fec_cpu_grant", params.fec_cpu_grant);
  check_range(issues, "nec_capacity", params.nec_capacity);
  check_range(issues, "fronthaul_capacity", params.fronthaul_capacity);
  if (params.fec_capacity < 0.0 || !std::isfinite(params.fec_capacity)) {
    issues.push_back("fec_capacity must be >= 0 and finite");
  }
  return issues;
}

Scenario generate(const GenParams& params) {
  const auto issues = validate_params(params);
  if (!issues.empty()) {
    std::ostringstream out;
    out << "generate: invalid params:";
    for (const auto& issue : issues) out << " [" << issue << "]";
    throw std::invalid_argument(out.str());
  }

  Xoshiro256StarStar rng(params.seed);
  const auto draw = [&](const Range& range) {
    return params.log_uniform ? log_uniform_in(rng, range.low, range.high)
                              : uniform_in(rng, range.low, range.high);
  };

  Scenario scenario;
  scenario.fec_capacity = params.fec_capacity;
  scenario.metadata.seed = params.seed;
  scenario.metadata.preset = params.preset;

  // Fixed draw stream: cells ascending; per UE the six task/link fields in
  // declaration order, then the two per-cell capacities.
  for (int j = 0; j < params.cell_count; ++j) {
    CellSpec cell;
    cell.cell_id = j;
    cell.ues.reserve(static_cast<size_t>(params.ues_per_cell));
    for (int i = 0; i < params.ues_per_cell; ++i) {
      UeEntry ue;
      ue.task.data_size = draw(params.data_size);
      ue.task.compute_demand = draw(params.compute_demand);
      ue.task.deadline = params.deadline;
      ue.link.wireless_rate = draw(params.wireless_rate);
      ue.link.fronthaul_rate = draw(params.fronthaul_rate);
      ue.link.nec_cpu_grant = draw(params.nec_cpu_grant);
      ue.link.fec_cpu_grant = draw(params.fec_cpu_grant);
      cell.ues.push_back(ue);
    }
    cell.nec_capacity = draw(params.nec_capacity);
    cell.fronthaul_capacity = draw(params.fronthaul_capacity);
    scenario.cells.push_back(std::move(cell));
  }

  if (!validate_scenario(scenario).empty()) {
    throw std::logic_error("generate: produced an invalid scenario");
  }
  return scenario;
}

}  // namespace nfcran
