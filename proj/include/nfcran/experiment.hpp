#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nfcran/scenario_gen.hpp"
#include "nfcran/solvers.hpp"

namespace nfcran {

/// Success rate versus offered load, two-tier deployment against a
/// far-edge-only baseline.
///
/// The baseline gets its own (usually larger) far-edge capacity,
/// `baseline_fec_capacity`; the substitution happens here, never inside the
/// solvers. Because that substitution changes two things at once
/// (architecture and capacity), an optional third curve re-runs the
/// far-edge-only solver at the unmodified capacity — a controlled ablation.
struct SweepSpec {
  std::vector<int> ues_per_cell_values;    // offered load axis
  std::vector<std::uint64_t> seeds;        // replications per point
  GenParams base_params;                   // ues_per_cell and seed overwritten per cell of the sweep
  double baseline_fec_capacity = 1e16;     // far-edge pool of the baseline
  std::vector<SolverConfig> solvers;       // modes EXACT or GREEDY only
  bool include_matched_baseline = false;   // adds CRAN_FEC_ONLY_MATCHED rows
};

enum class Architecture {
  NFC_RAN,                 // both tiers, scenario capacity as generated
  CRAN_FEC_ONLY,           // far edge only, baseline_fec_capacity substituted
  CRAN_FEC_ONLY_MATCHED,   // far edge only, capacity as generated
};

const char* to_string(Architecture architecture);

struct SweepRow {
  int ues_per_cell = 0;
  Architecture architecture = Architecture::NFC_RAN;
  std::string solver;
  double mean_success_rate = 0.0;
  double std_success_rate = 0.0;             // population std; one seed -> 0
  std::vector<double> per_seed_rates;        // ordered as spec.seeds
};

/// Rows sorted by (ues_per_cell, architecture label, solver label); exactly
/// one row per triple.
struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Runs every (N, seed, architecture, solver) cell. Each cell is independent
/// and reproducible in isolation: generation is pure in (params, seed) and
/// the solvers are deterministic. Errors propagate tagged with (N, seed).
SweepResult run_sweep(const SweepSpec& spec);

/// Writes the CSV table:
///   ues_per_cell,architecture,solver,mean_success_rate,std_success_rate,n_seeds
/// one data row per result row, 6-decimal fixed formatting, rows in sorted
/// order. Throws std::invalid_argument on an empty result; the path overload
/// creates no file in that case.
void emit_table(const SweepResult& result, std::ostream& out);
void emit_table(const SweepResult& result, const std::filesystem::path& path);

}  // namespace nfcran
