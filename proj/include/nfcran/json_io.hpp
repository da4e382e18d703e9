#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nfcran/constraints.hpp"
#include "nfcran/experiment.hpp"
#include "nfcran/model.hpp"
#include "nfcran/scenario_gen.hpp"

// Interchange formats. All numbers are in base units. Scenario documents use
// exactly the keys `fec_capacity`, `cells[]` (`cell_id`, `nec_capacity`,
// `fronthaul_capacity`, `ues[]` of {compute_demand, data_size, deadline,
// wireless_rate, fronthaul_rate, nec_cpu_grant, fec_cpu_grant}) and
// `metadata {seed, preset}`. Writers are deterministic (sorted keys,
// round-trip-exact doubles), so identical inputs yield identical bytes.

namespace nfcran {

nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& doc);

nlohmann::json assignment_to_json(const Assignment& assignment);
/// Validates totality against the scenario while loading.
Assignment assignment_from_json(const nlohmann::json& doc, const Scenario& scenario);

/// solve_time_s is intentionally not serialized (wall clock would break
/// byte-identical reruns).
nlohmann::json allocation_result_to_json(const AllocationResult& result);
AllocationResult allocation_result_from_json(const nlohmann::json& doc,
                                             const Scenario& scenario);

nlohmann::json report_to_json(const ConstraintReport& report);

nlohmann::json gen_params_to_json(const GenParams& params);
GenParams gen_params_from_json(const nlohmann::json& doc);

nlohmann::json sweep_spec_to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& doc);

/// Full per-seed detail of a sweep, the companion document to the CSV table.
nlohmann::json sweep_detail_to_json(const SweepSpec& spec, const SweepResult& result);

/// File helpers. Readers throw std::runtime_error (unreadable file) or
/// nlohmann::json::exception (malformed document); writers throw
/// std::runtime_error on I/O failure. Written files end with one newline.
void save_json(const nlohmann::json& doc, const std::filesystem::path& path);
nlohmann::json load_json(const std::filesystem::path& path);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace nfcran
