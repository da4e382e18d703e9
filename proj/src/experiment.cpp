#include "nfcran/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <tuple>

#include "nfcran/constraints.hpp"

namespace nfcran {

namespace {

SolverMode fec_only_mode_of(SolverMode mode) {
  return mode == SolverMode::EXACT ? SolverMode::FEC_ONLY_EXACT
                                   : SolverMode::FEC_ONLY_GREEDY;
}

void validate_spec(const SweepSpec& spec) {
  if (spec.ues_per_cell_values.empty()) {
    throw std::invalid_argument("run_sweep: ues_per_cell_values is empty");
  }
  if (spec.seeds.empty()) {
    throw std::invalid_argument("run_sweep: seeds list is empty");
  }
  if (!(spec.baseline_fec_capacity > 0.0)) {
    throw std::invalid_argument("run_sweep: baseline_fec_capacity must be > 0");
  }
  if (spec.solvers.empty()) {
    throw std::invalid_argument("run_sweep: no solvers requested");
  }
  for (const SolverConfig& config : spec.solvers) {
    if (config.solver != SolverMode::EXACT && config.solver != SolverMode::GREEDY) {
      throw std::invalid_argument(
          "run_sweep: solvers must be EXACT or GREEDY; the far-edge-only "
          "variant is derived per architecture");
    }
  }
}

std::string tag(int ues_per_cell, std::uint64_t seed) {
  return "N=" + std::to_string(ues_per_cell) + " seed=" + std::to_string(seed);
}

}  // namespace

const char* to_string(Architecture architecture) {
  switch (architecture) {
    case Architecture::NFC_RAN: return "NFC_RAN";
    case Architecture::CRAN_FEC_ONLY: return "CRAN_FEC_ONLY";
    case Architecture::CRAN_FEC_ONLY_MATCHED: return "CRAN_FEC_ONLY_MATCHED";
  }
  return "?";
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate_spec(spec);

  // (N, architecture, solver label) -> per-seed rates in seed order.
  std::map<std::tuple<int, Architecture, std::string>, std::vector<double>> cells;

  for (const int n : spec.ues_per_cell_values) {
    for (const std::uint64_t seed : spec.seeds) {
      GenParams params = spec.base_params;
      params.ues_per_cell = n;
      params.seed = seed;

      Scenario scenario;
      try {
        scenario = generate(params);
      } catch (const std::exception& e) {
        throw std::runtime_error("sweep cell " + tag(n, seed) +
                                 ": generation failed: " + e.what());
      }

      Scenario baseline = scenario;
      baseline.fec_capacity = spec.baseline_fec_capacity;

      for (const SolverConfig& config : spec.solvers) {
        const std::string solver = solver_label(config);
        SolverConfig fec_only = config;
        fec_only.solver = fec_only_mode_of(config.solver);
        try {
          const AllocationResult full = solve(scenario, config);
          cells[{n, Architecture::NFC_RAN, solver}].push_back(full.success_rate);

          const AllocationResult cran = solve(baseline, fec_only);
          cells[{n, Architecture::CRAN_FEC_ONLY, solver}].push_back(
              cran.success_rate);

          if (spec.include_matched_baseline) {
            const AllocationResult matched = solve(scenario, fec_only);
            cells[{n, Architecture::CRAN_FEC_ONLY_MATCHED, solver}].push_back(
                matched.success_rate);
          }
        } catch (const std::exception& e) {
          throw std::runtime_error("sweep cell " + tag(n, seed) + " solver " +
                                   solver + ": " + e.what());
        }
      }
    }
  }

  SweepResult result;
  for (const auto& [key, rates] : cells) {
    SweepRow row;
    row.ues_per_cell = std::get<0>(key);
    row.architecture = std::get<1>(key);
    row.solver = std::get<2>(key);
    row.per_seed_rates = rates;

    double sum = 0.0;
    for (const double rate : rates) sum += rate;
    row.mean_success_rate = sum / static_cast<double>(rates.size());
    double sq = 0.0;
    for (const double rate : rates) {
      const double d = rate - row.mean_success_rate;
      sq += d * d;
    }
    // Population std; a single seed reports 0.
    row.std_success_rate = std::sqrt(sq / static_cast<double>(rates.size()));
    result.rows.push_back(std::move(row));
  }

  // Row order matches the emitted table: sort by the printed labels.
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              return std::tuple(a.ues_per_cell,
                                std::string_view(to_string(a.architecture)),
                                std::string_view(a.solver)) <
                     std::tuple(b.ues_per_cell,
                                std::string_view(to_string(b.architecture)),
                                std::string_view(b.solver));
            });
  return result;
}

void emit_table(const SweepResult& result, std::ostream& out) {
  if (result.rows.empty()) {
    throw std::invalid_argument("emit_table: result is empty");
  }
  out << "ues_per_cell,architecture,solver,mean_success_rate,std_success_rate,n_seeds\n";
  char buffer[64];
  for (const SweepRow& row : result.rows) {
    out << row.ues_per_cell << ',' << to_string(row.architecture) << ','
        << row.solver << ',';
    std::snprintf(buffer, sizeof buffer, "%.6f", row.mean_success_rate);
    out << buffer << ',';
    std::snprintf(buffer, sizeof buffer, "%.6f", row.std_success_rate);
    out << buffer << ',' << row.per_seed_rates.size() << '\n';
  }
}

void emit_table(const SweepResult& result, const std::filesystem::path& path) {
  if (result.rows.empty()) {
    // Checked before opening so an empty result never creates a file.
    throw std::invalid_argument("emit_table: result is empty");
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit_table: cannot open " + path.string());
  }
  emit_table(result, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("emit_table: write failed for " + path.string());
  }
}

}  // namespace nfcran
