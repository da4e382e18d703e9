#include "nfcran/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "nfcran/errors.hpp"

namespace nfcran {

using nlohmann::json;

namespace {

Decision decision_from_string(const std::string& text) {
  if (text == "FEC") return Decision::FEC;
  if (text == "NEC") return Decision::NEC;
  if (text == "REJECT") return Decision::REJECT;
  throw std::invalid_argument("unknown decision '" + text + "'");
}

json range_to_json(const Range& range) {
  return json::array({range.low, range.high});
}

Range range_from_json(const json& doc) {
  if (!doc.is_array() || doc.size() != 2) {
    throw std::invalid_argument("range must be a [low, high] array");
  }
  return Range{doc.at(0).get<double>(), doc.at(1).get<double>()};
}

}  // namespace

json scenario_to_json(const Scenario& scenario) {
  json cells = json::array();
  for (const CellSpec& cell : scenario.cells) {
    json ues = json::array();
    for (const UeEntry& ue : cell.ues) {
      ues.push_back(json{{"compute_demand", ue.task.compute_demand},
                         {"data_size", ue.task.data_size},
                         {"deadline", ue.task.deadline},
                         {"wireless_rate", ue.link.wireless_rate},
                         {"fronthaul_rate", ue.link.fronthaul_rate},
                         {"nec_cpu_grant", ue.link.nec_cpu_grant},
                         {"fec_cpu_grant", ue.link.fec_cpu_grant}});
    }
    cells.push_back(json{{"cell_id", cell.cell_id},
                         {"nec_capacity", cell.nec_capacity},
                         {"fronthaul_capacity", cell.fronthaul_capacity},
                         {"ues", std::move(ues)}});
  }
  return json{{"fec_capacity", scenario.fec_capacity},
              {"cells", std::move(cells)},
              {"metadata",
               json{{"seed", scenario.metadata.seed},
                    {"preset", scenario.metadata.preset}}}};
}

Scenario scenario_from_json(const json& doc) {
  Scenario scenario;
  scenario.fec_capacity = doc.at("fec_capacity").get<double>();
  for (const json& cell_doc : doc.at("cells")) {
    CellSpec cell;
    cell.cell_id = cell_doc.at("cell_id").get<int>();
    cell.nec_capacity = cell_doc.at("nec_capacity").get<double>();
    cell.fronthaul_capacity = cell_doc.at("fronthaul_capacity").get<double>();
    for (const json& ue_doc : cell_doc.at("ues")) {
      UeEntry ue;
      ue.task.compute_demand = ue_doc.at("compute_demand").get<double>();
      ue.task.data_size = ue_doc.at("data_size").get<double>();
      ue.task.deadline = ue_doc.at("deadline").get<double>();
      ue.link.wireless_rate = ue_doc.at("wireless_rate").get<double>();
      ue.link.fronthaul_rate = ue_doc.at("fronthaul_rate").get<double>();
      ue.link.nec_cpu_grant = ue_doc.at("nec_cpu_grant").get<double>();
      ue.link.fec_cpu_grant = ue_doc.at("fec_cpu_grant").get<double>();
      cell.ues.push_back(ue);
    }
    scenario.cells.push_back(std::move(cell));
  }
  // Metadata is written always but read leniently: hand-written instances
  // without it still load.
  if (doc.contains("metadata")) {
    const json& meta = doc.at("metadata");
    if (meta.contains("seed")) scenario.metadata.seed = meta.at("seed").get<std::uint64_t>();
    if (meta.contains("preset")) scenario.metadata.preset = meta.at("preset").get<std::string>();
  }
  return scenario;
}

json assignment_to_json(const Assignment& assignment) {
  json decisions = json::array();
  for (const auto& [key, decision] : assignment.decisions()) {
    decisions.push_back(json{{"cell_id", key.cell_id},
                             {"ue_index", key.ue_index},
                             {"decision", to_string(decision)}});
  }
  return json{{"decisions", std::move(decisions)}};
}

Assignment assignment_from_json(const json& doc, const Scenario& scenario) {
  // Accept either a bare assignment document or a solver result embedding one.
  const json& root = doc.contains("assignment") ? doc.at("assignment") : doc;
  std::vector<std::pair<TaskKey, Decision>> decisions;
  for (const json& entry : root.at("decisions")) {
    decisions.emplace_back(
        TaskKey{entry.at("cell_id").get<int>(), entry.at("ue_index").get<int>()},
        decision_from_string(entry.at("decision").get<std::string>()));
  }
  return Assignment::for_scenario(scenario, decisions);
}

json allocation_result_to_json(const AllocationResult& result) {
  json nec = json::array();
  for (const auto& [cell_id, used] : result.usage.nec_cycles_per_s) {
    nec.push_back(json{{"cell_id", cell_id}, {"used", used}});
  }
  json fronthaul = json::array();
  for (const auto& [cell_id, used] : result.usage.fronthaul_bits_per_s) {
    fronthaul.push_back(json{{"cell_id", cell_id}, {"used", used}});
  }
  return json{{"assignment", assignment_to_json(result.assignment)},
              {"objective", result.objective},
              {"success_rate", result.success_rate},
              {"solver_name", result.solver_name},
              {"usage",
               json{{"fec_cycles_per_s", result.usage.fec_cycles_per_s},
                    {"nec_cycles_per_s", std::move(nec)},
                    {"fronthaul_bits_per_s", std::move(fronthaul)}}}};
}

AllocationResult allocation_result_from_json(const json& doc,
                                             const Scenario& scenario) {
  Assignment assignment = assignment_from_json(doc.at("assignment"), scenario);
  ResourceUsage usage;
  const json& usage_doc = doc.at("usage");
  usage.fec_cycles_per_s = usage_doc.at("fec_cycles_per_s").get<double>();
  for (const json& entry : usage_doc.at("nec_cycles_per_s")) {
    usage.nec_cycles_per_s[entry.at("cell_id").get<int>()] =
        entry.at("used").get<double>();
  }
  for (const json& entry : usage_doc.at("fronthaul_bits_per_s")) {
    usage.fronthaul_bits_per_s[entry.at("cell_id").get<int>()] =
        entry.at("used").get<double>();
  }
  return AllocationResult{std::move(assignment),
                          doc.at("objective").get<int>(),
                          doc.at("success_rate").get<double>(),
                          std::move(usage),
                          doc.at("solver_name").get<std::string>(),
                          0.0};
}

json report_to_json(const ConstraintReport& report) {
  json violations = json::array();
  for (const ConstraintViolation& v : report.violations) {
    json entry{{"constraint", to_string(v.constraint)},
               {"measured", v.measured},
               {"bound", v.bound}};
    if (v.cell_id) entry["cell_id"] = *v.cell_id;
    if (v.ue_index) entry["ue_index"] = *v.ue_index;
    violations.push_back(std::move(entry));
  }
  return json{{"feasible", report.feasible()},
              {"violations", std::move(violations)},
              {"c6_c7", "satisfied by construction"}};
}

json gen_params_to_json(const GenParams& params) {
  return json{{"cell_count", params.cell_count},
              {"ues_per_cell", params.ues_per_cell},
              {"deadline", params.deadline},
              {"ranges",
               json{{"data_size", range_to_json(params.data_size)},
                    {"compute_demand", range_to_json(params.compute_demand)},
                    {"wireless_rate", range_to_json(params.wireless_rate)},
                    {"fronthaul_rate", range_to_json(params.fronthaul_rate)},
                    {"nec_cpu_grant", range_to_json(params.nec_cpu_grant)},
                    {"fec_cpu_grant", range_to_json(params.fec_cpu_grant)},
                    {"nec_capacity", range_to_json(params.nec_capacity)},
                    {"fronthaul_capacity", range_to_json(params.fronthaul_capacity)}}},
              {"fec_capacity", params.fec_capacity},
              {"seed", params.seed},
              {"log_uniform", params.log_uniform},
              {"preset", params.preset}};
}

GenParams gen_params_from_json(const json& doc) {
  GenParams params;
  params.cell_count = doc.at("cell_count").get<int>();
  params.ues_per_cell = doc.at("ues_per_cell").get<int>();
  params.deadline = doc.at("deadline").get<double>();
  const json& ranges = doc.at("ranges");
  params.data_size = range_from_json(ranges.at("data_size"));
  params.compute_demand = range_from_json(ranges.at("compute_demand"));
  params.wireless_rate = range_from_json(ranges.at("wireless_rate"));
  params.fronthaul_rate = range_from_json(ranges.at("fronthaul_rate"));
  params.nec_cpu_grant = range_from_json(ranges.at("nec_cpu_grant"));
  params.fec_cpu_grant = range_from_json(ranges.at("fec_cpu_grant"));
  params.nec_capacity = range_from_json(ranges.at("nec_capacity"));
  params.fronthaul_capacity = range_from_json(ranges.at("fronthaul_capacity"));
  params.fec_capacity = doc.at("fec_capacity").get<double>();
  params.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("log_uniform")) params.log_uniform = doc.at("log_uniform").get<bool>();
  if (doc.contains("preset")) params.preset = doc.at("preset").get<std::string>();
  return params;
}

json sweep_spec_to_json(const SweepSpec& spec) {
  json solvers = json::array();
  for (const SolverConfig& config : spec.solvers) {
    solvers.push_back(solver_label(config));
  }
  return json{{"ues_per_cell_values", spec.ues_per_cell_values},
              {"seeds", spec.seeds},
              {"base_params", gen_params_to_json(spec.base_params)},
              {"baseline_fec_capacity", spec.baseline_fec_capacity},
              {"solvers", std::move(solvers)},
              {"include_matched_baseline", spec.include_matched_baseline}};
}

SweepSpec sweep_spec_from_json(const json& doc) {
  SweepSpec spec;
  spec.ues_per_cell_values = doc.at("ues_per_cell_values").get<std::vector<int>>();
  spec.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
  spec.base_params = gen_params_from_json(doc.at("base_params"));
  spec.baseline_fec_capacity = doc.at("baseline_fec_capacity").get<double>();
  for (const json& entry : doc.at("solvers")) {
    const std::string label = entry.get<std::string>();
    SolverConfig config;
    if (label == "exact") {
      config.solver = SolverMode::EXACT;
    } else if (label == "greedy" || label == "greedy-min-footprint") {
      config.solver = SolverMode::GREEDY;
      config.greedy_scoring = GreedyScoring::MIN_FOOTPRINT;
    } else if (label == "greedy-penalty") {
      config.solver = SolverMode::GREEDY;
      config.greedy_scoring = GreedyScoring::PENALTY;
    } else {
      throw std::invalid_argument("sweep spec: unknown solver '" + label + "'");
    }
    spec.solvers.push_back(config);
  }
  if (doc.contains("include_matched_baseline")) {
    spec.include_matched_baseline = doc.at("include_matched_baseline").get<bool>();
  }
  return spec;
}

json sweep_detail_to_json(const SweepSpec& spec, const SweepResult& result) {
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    rows.push_back(json{{"ues_per_cell", row.ues_per_cell},
                        {"architecture", to_string(row.architecture)},
                        {"solver", row.solver},
                        {"mean_success_rate", row.mean_success_rate},
                        {"std_success_rate", row.std_success_rate},
                        {"per_seed_rates", row.per_seed_rates},
                        {"seeds", spec.seeds}});
  }
  return json{{"spec", sweep_spec_to_json(spec)}, {"rows", std::move(rows)}};
}

void save_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  return json::parse(in);
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  save_json(scenario_to_json(scenario), path);
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(load_json(path));
}

}  // namespace nfcran
