// Command-line front end: scenario generation, solving, independent
// feasibility checking, and the success-rate-versus-load sweep.
//
// Exit codes (stable): 0 success, 1 usage error, 2 I/O or parse error
// (including mismatched scenario/assignment pairs), 3 infeasible result or
// solver guard refusal.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfcran/constraints.hpp"
#include "nfcran/errors.hpp"
#include "nfcran/experiment.hpp"
#include "nfcran/json_io.hpp"
#include "nfcran/model.hpp"
#include "nfcran/scenario_gen.hpp"
#include "nfcran/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInfeasible = 3;

std::string fmt_num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

std::string fmt_rate(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

struct GenArgs {
  std::string preset = "paper";
  int ues_per_cell = 0;
  std::uint64_t seed = 0;
  std::string out;
  int cells = -1;
  double deadline = -1.0;
  double fec_capacity = -1.0;
  bool log_uniform = false;
  std::vector<double> data_size, compute_demand, wireless_rate, fronthaul_rate,
      nec_cpu_grant, fec_cpu_grant, nec_capacity, fronthaul_capacity;
};

struct SolveArgs {
  std::string in;
  std::string solver = "greedy";
  std::string scoring = "min-footprint";
  int exact_task_limit = nfcran::kDefaultExactTaskLimit;
  std::string out;
};

struct CheckArgs {
  std::string scenario;
  std::string assignment;
};

struct SweepArgs {
  std::string spec_path;
  std::string preset = "paper";
  std::vector<int> ues_per_cell_values{10, 20, 30, 40, 50};
  int seed_count = 20;
  std::uint64_t seed_base = 1;
  std::vector<std::string> solvers{"greedy-min-footprint"};
  double baseline_fec_capacity = 1e16;
  bool matched_baseline = false;
  int exact_task_limit = nfcran::kDefaultExactTaskLimit;
  std::string out;
  std::string detail;
};

nfcran::GenParams build_gen_params(const GenArgs& args) {
  nfcran::GenParams params = args.preset == "positioning"
                                 ? nfcran::positioning_preset()
                                 : nfcran::paper_preset();
  params.ues_per_cell = args.ues_per_cell;
  params.seed = args.seed;

  bool customized = false;
  const auto apply_range = [&](const std::vector<double>& values,
                               nfcran::Range& range) {
    if (values.size() == 2) {
      range = nfcran::Range{values[0], values[1]};
      customized = true;
    }
  };
  if (args.cells > 0) { params.cell_count = args.cells; customized = true; }
  if (args.deadline > 0.0) { params.deadline = args.deadline; customized = true; }
  if (args.fec_capacity >= 0.0) { params.fec_capacity = args.fec_capacity; customized = true; }
  if (args.log_uniform) { params.log_uniform = true; customized = true; }
  apply_range(args.data_size, params.data_size);
  apply_range(args.compute_demand, params.compute_demand);
  apply_range(args.wireless_rate, params.wireless_rate);
  apply_range(args.fronthaul_rate, params.fronthaul_rate);
  apply_range(args.nec_cpu_grant, params.nec_cpu_grant);
  apply_range(args.fec_cpu_grant, params.fec_cpu_grant);
  apply_range(args.nec_capacity, params.nec_capacity);
  apply_range(args.fronthaul_capacity, params.fronthaul_capacity);
  if (customized) params.preset += "-custom";  // seed alone no longer regenerates it
  return params;
}

int cmd_gen(const GenArgs& args) {
  const nfcran::GenParams params = build_gen_params(args);
  const nfcran::Scenario scenario = nfcran::generate(params);
  nfcran::save_scenario(scenario, args.out);

  std::cout << "wrote " << args.out << "\n"
            << "  preset: " << params.preset << "  seed: " << params.seed << "\n"
            << "  cells: " << scenario.cells.size()
            << "  tasks: " << nfcran::total_task_count(scenario) << "\n"
            << "  fec_capacity: " << fmt_num(scenario.fec_capacity) << " cycles/s\n";
  for (const nfcran::CellSpec& cell : scenario.cells) {
    std::cout << "  cell " << cell.cell_id
              << ": nec_capacity " << fmt_num(cell.nec_capacity)
              << " cycles/s, fronthaul_capacity " << fmt_num(cell.fronthaul_capacity)
              << " bits/s\n";
  }
  return kExitOk;
}

int cmd_solve(const SolveArgs& args) {
  const nfcran::Scenario scenario = nfcran::load_scenario(args.in);
  const auto issues = nfcran::validate_scenario(scenario);
  if (!issues.empty()) {
    std::cerr << "error: scenario " << args.in << " is not well-formed:\n";
    for (const auto& issue : issues) std::cerr << "  " << issue << "\n";
    return kExitIo;
  }

  nfcran::SolverConfig config;
  if (!nfcran::solver_mode_from_string(args.solver, config.solver)) {
    std::cerr << "error: unknown solver '" << args.solver << "'\n";
    return kExitUsage;
  }
  if (!nfcran::greedy_scoring_from_string(args.scoring, config.greedy_scoring)) {
    std::cerr << "error: unknown scoring '" << args.scoring << "'\n";
    return kExitUsage;
  }
  config.exact_task_limit = args.exact_task_limit;

  const nfcran::AllocationResult result = nfcran::solve(scenario, config);

  // The solver audits its own output; refuse to emit anything infeasible.
  const nfcran::ConstraintReport report =
      nfcran::audit(scenario, result.assignment);
  if (!report.feasible()) {
    std::cerr << "INTERNAL ERROR: solver output failed its own audit ("
              << report.violations.size() << " violation(s)); nothing written\n";
    return kExitInfeasible;
  }

  nfcran::save_json(nfcran::allocation_result_to_json(result), args.out);

  const int total = nfcran::total_task_count(scenario);
  std::cout << "solver: " << result.solver_name << "\n"
            << "objective: " << result.objective << " / " << total << " tasks\n"
            << "success_rate: " << fmt_rate(result.success_rate) << "\n"
            << "solve_time_s: " << result.solve_time_s << "\n"
            << "utilization:\n"
            << "  fec_cycles_per_s: " << fmt_num(result.usage.fec_cycles_per_s)
            << " / " << fmt_num(scenario.fec_capacity) << "\n";
  for (const nfcran::CellSpec& cell : scenario.cells) {
    std::cout << "  cell " << cell.cell_id << ": nec "
              << fmt_num(result.usage.nec_cycles_per_s.at(cell.cell_id)) << " / "
              << fmt_num(cell.nec_capacity) << ", fronthaul "
              << fmt_num(result.usage.fronthaul_bits_per_s.at(cell.cell_id))
              << " / " << fmt_num(cell.fronthaul_capacity) << "\n";
  }
  std::cout << "wrote " << args.out << "\n";
  return kExitOk;
}

int cmd_check(const CheckArgs& args) {
  const nfcran::Scenario scenario = nfcran::load_scenario(args.scenario);
  const nlohmann::json assignment_doc = nfcran::load_json(args.assignment);
  const nfcran::Assignment assignment =
      nfcran::assignment_from_json(assignment_doc, scenario);

  const nfcran::ConstraintReport report = nfcran::audit(scenario, assignment);
  std::cout << "tasks: " << nfcran::total_task_count(scenario)
            << "  accepted: " << assignment.accepted_count() << "\n"
            << "C6/C7: satisfied by construction\n";
  if (report.feasible()) {
    std::cout << "feasible: yes\n"
              << "success_rate: "
              << fmt_rate(nfcran::success_rate(scenario, assignment)) << "\n";
    return kExitOk;
  }
  std::cout << "feasible: no (" << report.violations.size() << " violation(s))\n";
  for (const nfcran::ConstraintViolation& v : report.violations) {
    std::cout << "  " << nfcran::to_string(v.constraint);
    if (v.cell_id) std::cout << " cell " << *v.cell_id;
    if (v.ue_index) std::cout << " ue " << *v.ue_index;
    std::cout << ": measured " << fmt_num(v.measured) << " > bound "
              << fmt_num(v.bound) << "\n";
  }
  return kExitInfeasible;
}

nfcran::SweepSpec build_sweep_spec(const SweepArgs& args) {
  if (!args.spec_path.empty()) {
    return nfcran::sweep_spec_from_json(nfcran::load_json(args.spec_path));
  }
  nfcran::SweepSpec spec;
  spec.base_params = args.preset == "positioning" ? nfcran::positioning_preset()
                                                  : nfcran::paper_preset();
  spec.ues_per_cell_values = args.ues_per_cell_values;
  if (args.seed_count < 1) {
    throw std::invalid_argument("sweep: --seeds must be >= 1");
  }
  spec.seeds.resize(static_cast<size_t>(args.seed_count));
  std::iota(spec.seeds.begin(), spec.seeds.end(), args.seed_base);
  spec.baseline_fec_capacity = args.baseline_fec_capacity;
  spec.include_matched_baseline = args.matched_baseline;
  for (const std::string& label : args.solvers) {
    nfcran::SolverConfig config;
    config.exact_task_limit = args.exact_task_limit;
    if (label == "exact") {
      config.solver = nfcran::SolverMode::EXACT;
    } else if (label == "greedy" || label == "greedy-min-footprint") {
      config.solver = nfcran::SolverMode::GREEDY;
    } else if (label == "greedy-penalty") {
      config.solver = nfcran::SolverMode::GREEDY;
      config.greedy_scoring = nfcran::GreedyScoring::PENALTY;
    } else {
      throw std::invalid_argument("sweep: unknown solver '" + label + "'");
    }
    spec.solvers.push_back(config);
  }
  return spec;
}

int cmd_sweep(const SweepArgs& args) {
  const nfcran::SweepSpec spec = build_sweep_spec(args);
  const nfcran::SweepResult result = nfcran::run_sweep(spec);

  // Whole result is in memory before anything is written, so a failed cell
  // never leaves a partial table behind.
  std::ostringstream seeds;
  for (size_t i = 0; i < spec.seeds.size(); ++i) {
    if (i > 0) seeds << ";";
    seeds << spec.seeds[i];
  }
  std::ostringstream solvers;
  for (size_t i = 0; i < spec.solvers.size(); ++i) {
    if (i > 0) solvers << ";";
    solvers << nfcran::solver_label(spec.solvers[i]);
  }
  std::ostringstream loads;
  for (size_t i = 0; i < spec.ues_per_cell_values.size(); ++i) {
    if (i > 0) loads << ";";
    loads << spec.ues_per_cell_values[i];
  }

  std::ofstream out(args.out);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + args.out);
  }
  // Spec echo: the baseline runs far-edge-only with its capacity replaced by
  // baseline_fec_capacity; nothing else is ever substituted.
  out << "# preset=" << spec.base_params.preset
      << " cells=" << spec.base_params.cell_count
      << " deadline=" << fmt_num(spec.base_params.deadline)
      << " ues_per_cell=" << loads.str() << " seeds=" << seeds.str()
      << " solvers=" << solvers.str()
      << " nfc_fec_capacity=" << fmt_num(spec.base_params.fec_capacity)
      << " baseline_fec_capacity=" << fmt_num(spec.baseline_fec_capacity)
      << " matched_baseline=" << (spec.include_matched_baseline ? "on" : "off")
      << "\n";
  nfcran::emit_table(result, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + args.out);
  }

  if (!args.detail.empty()) {
    nfcran::save_json(nfcran::sweep_detail_to_json(spec, result), args.detail);
  }

  // Mean-rate curves as aligned columns, one row per load level.
  std::vector<std::pair<nfcran::Architecture, std::string>> columns;
  std::set<int> load_levels;
  for (const nfcran::SweepRow& row : result.rows) {
    const auto column = std::make_pair(row.architecture, row.solver);
    if (std::find(columns.begin(), columns.end(), column) == columns.end()) {
      columns.push_back(column);
    }
    load_levels.insert(row.ues_per_cell);
  }
  const auto mean_of = [&](int n, const nfcran::Architecture architecture,
                           const std::string& solver) {
    for (const nfcran::SweepRow& row : result.rows) {
      if (row.ues_per_cell == n && row.architecture == architecture &&
          row.solver == solver) {
        return row.mean_success_rate;
      }
    }
    return -1.0;  // unreachable: rows cover every (N, column) pair
  };

  std::printf("%-14s", "ues_per_cell");
  std::vector<int> widths;
  for (const auto& [architecture, solver] : columns) {
    const std::string header =
        std::string(nfcran::to_string(architecture)) + "/" + solver;
    const int width = static_cast<int>(header.size()) + 2;
    widths.push_back(width);
    std::printf("%-*s", width, header.c_str());
  }
  std::printf("\n");
  for (const int n : load_levels) {
    std::printf("%-14d", n);
    for (size_t c = 0; c < columns.size(); ++c) {
      std::printf("%-*s", widths[c],
                  fmt_rate(mean_of(n, columns[c].first, columns[c].second)).c_str());
    }
    std::printf("\n");
  }
  std::cout << "wrote " << args.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nfcran: task allocation for a two-tier (near/far) edge C-RAN"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a random scenario from a preset and a seed");
  gen->add_option("--preset", gen_args.preset, "paper | positioning")
      ->check(CLI::IsMember({"paper", "positioning"}));
  gen->add_option("--ues-per-cell", gen_args.ues_per_cell, "UEs per cell (N)")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed, "generation seed (default 0)");
  gen->add_option("--out", gen_args.out, "output scenario file")->required();
  gen->add_option("--cells", gen_args.cells, "override cell count");
  gen->add_option("--deadline", gen_args.deadline, "override deadline (s)");
  gen->add_option("--fec-capacity", gen_args.fec_capacity,
                  "override far-edge pool capacity (cycles/s)");
  gen->add_flag("--log-uniform", gen_args.log_uniform,
                "draw ranges log-uniformly instead of uniformly");
  gen->add_option("--data-size", gen_args.data_size, "override range: LOW HIGH")
      ->expected(2);
  gen->add_option("--compute-demand", gen_args.compute_demand,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--wireless-rate", gen_args.wireless_rate,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--fronthaul-rate", gen_args.fronthaul_rate,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--nec-cpu-grant", gen_args.nec_cpu_grant,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--fec-cpu-grant", gen_args.fec_cpu_grant,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--nec-capacity", gen_args.nec_capacity,
                  "override range: LOW HIGH")->expected(2);
  gen->add_option("--fronthaul-capacity", gen_args.fronthaul_capacity,
                  "override range: LOW HIGH")->expected(2);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve a scenario file");
  solve->add_option("--in", solve_args.in, "scenario file")->required();
  solve->add_option("--solver", solve_args.solver,
                    "exact | greedy | fec-only-exact | fec-only-greedy")
      ->check(CLI::IsMember({"exact", "greedy", "fec-only-exact", "fec-only-greedy"}));
  solve->add_option("--scoring", solve_args.scoring, "min-footprint | penalty")
      ->check(CLI::IsMember({"min-footprint", "penalty"}));
  solve->add_option("--exact-task-limit", solve_args.exact_task_limit,
                    "guard for the exact solver");
  solve->add_option("--out", solve_args.out, "output result file")->required();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Audit an assignment (or solver result) against a scenario");
  check->add_option("--scenario", check_args.scenario, "scenario file")->required();
  check->add_option("--assignment", check_args.assignment,
                    "assignment or result file")->required();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Success rate versus offered load, both architectures");
  sweep->add_option("--spec", sweep_args.spec_path,
                    "sweep spec file (overrides the flags below)");
  sweep->add_option("--preset", sweep_args.preset, "paper | positioning")
      ->check(CLI::IsMember({"paper", "positioning"}));
  sweep->add_option("--ues-per-cell-values", sweep_args.ues_per_cell_values,
                    "load levels to sweep");
  sweep->add_option("--seeds", sweep_args.seed_count, "number of seeds per point")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed-base", sweep_args.seed_base,
                    "first seed; seeds are consecutive");
  sweep->add_option("--solvers", sweep_args.solvers,
                    "exact | greedy-min-footprint | greedy-penalty");
  sweep->add_option("--baseline-fec-capacity", sweep_args.baseline_fec_capacity,
                    "far-edge pool of the far-edge-only baseline (cycles/s)");
  sweep->add_flag("--matched-baseline", sweep_args.matched_baseline,
                  "also run the baseline at the unmodified capacity");
  sweep->add_option("--exact-task-limit", sweep_args.exact_task_limit,
                    "guard for the exact solver");
  sweep->add_option("--out", sweep_args.out, "output CSV file")->required();
  sweep->add_option("--detail", sweep_args.detail,
                    "optional per-seed detail JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (check->parsed()) return cmd_check(check_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const nfcran::InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const nfcran::InfeasibleAssignmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const nfcran::TaskSetMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::logic_error& e) {
    std::cerr << "INTERNAL ERROR: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
