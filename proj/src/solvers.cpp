#include "nfcran/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfcran/constraints.hpp"
#include "nfcran/errors.hpp"

namespace nfcran {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Flattened instance in canonical (cell_id, ue_index) order. The solvers
// assign tasks by canonical index; `cell_pos` maps a task to its cell's slot
// in the per-cell capacity arrays.
struct Instance {
  const Scenario* scenario = nullptr;
  std::vector<TaskRef> tasks;
  std::vector<int> cell_pos;                 // per task
  std::vector<double> nec_capacity;          // per cell position
  std::vector<double> fronthaul_capacity;    // per cell position
  std::vector<std::vector<int>> cell_tasks;  // task indices per cell position, ascending
  std::vector<char> fec_ok;                  // C1 holds (deadline only)
  std::vector<char> nec_ok;                  // C2 holds (deadline only)

  explicit Instance(const Scenario& s) : scenario(&s), tasks(canonical_tasks(s)) {
    std::map<int, int> pos_of_cell;
    for (const CellSpec& cell : s.cells) {
      const int pos = static_cast<int>(nec_capacity.size());
      pos_of_cell[cell.cell_id] = pos;
      nec_capacity.push_back(cell.nec_capacity);
      fronthaul_capacity.push_back(cell.fronthaul_capacity);
      cell_tasks.emplace_back();
    }
    cell_pos.reserve(tasks.size());
    fec_ok.reserve(tasks.size());
    nec_ok.reserve(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i) {
      const int pos = pos_of_cell.at(tasks[i].key.cell_id);
      cell_pos.push_back(pos);
      cell_tasks[static_cast<size_t>(pos)].push_back(static_cast<int>(i));
      fec_ok.push_back(is_task_feasible_on(Target::FEC, *tasks[i].task, *tasks[i].link));
      nec_ok.push_back(is_task_feasible_on(Target::NEC, *tasks[i].task, *tasks[i].link));
    }
  }

  int size() const { return static_cast<int>(tasks.size()); }
  double fec_grant(int i) const { return tasks[static_cast<size_t>(i)].link->fec_cpu_grant; }
  double nec_grant(int i) const { return tasks[static_cast<size_t>(i)].link->nec_cpu_grant; }
  double fronthaul_rate(int i) const { return tasks[static_cast<size_t>(i)].link->fronthaul_rate; }
};

// Capacity checks for placements made out of canonical order (the greedy
// paths). Each check re-sums the affected dimension over the tentative
// accepted set in canonical index order — the same operand sequence the
// audit uses — so a passing check here can never be contradicted there.
struct CanonicalFit {
  const Instance& inst;
  const std::vector<Decision>& decisions;

  bool fits_fec(int candidate) const {
    double fec_sum = 0.0;
    for (int i = 0; i < inst.size(); ++i) {
      if (decisions[static_cast<size_t>(i)] == Decision::FEC || i == candidate) {
        fec_sum += inst.fec_grant(i);
      }
    }
    if (!leq_within_slack(fec_sum, inst.scenario->fec_capacity)) return false;

    const int cell = inst.cell_pos[static_cast<size_t>(candidate)];
    double fronthaul_sum = 0.0;
    for (const int i : inst.cell_tasks[static_cast<size_t>(cell)]) {
      if (decisions[static_cast<size_t>(i)] == Decision::FEC || i == candidate) {
        fronthaul_sum += inst.fronthaul_rate(i);
      }
    }
    return leq_within_slack(fronthaul_sum,
                            inst.fronthaul_capacity[static_cast<size_t>(cell)]);
  }

  bool fits_nec(int candidate) const {
    const int cell = inst.cell_pos[static_cast<size_t>(candidate)];
    double nec_sum = 0.0;
    for (const int i : inst.cell_tasks[static_cast<size_t>(cell)]) {
      if (decisions[static_cast<size_t>(i)] == Decision::NEC || i == candidate) {
        nec_sum += inst.nec_grant(i);
      }
    }
    return leq_within_slack(nec_sum, inst.nec_capacity[static_cast<size_t>(cell)]);
  }
};

// Running remaining capacities used only for heuristic scores; acceptance is
// always re-checked through CanonicalFit.
struct RunningState {
  double fec_used = 0.0;
  std::vector<double> nec_used;
  std::vector<double> fronthaul_used;

  explicit RunningState(const Instance& inst)
      : nec_used(inst.nec_capacity.size(), 0.0),
        fronthaul_used(inst.fronthaul_capacity.size(), 0.0) {}

  void place(const Instance& inst, int i, Decision d) {
    const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);
    if (d == Decision::FEC) {
      fec_used += inst.fec_grant(i);
      fronthaul_used[cell] += inst.fronthaul_rate(i);
    } else if (d == Decision::NEC) {
      nec_used[cell] += inst.nec_grant(i);
    }
  }
};

double fec_footprint(const Instance& inst, const RunningState& state, int i) {
  const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);
  const double fec_rem = inst.scenario->fec_capacity - state.fec_used;
  const double fronthaul_rem =
      inst.fronthaul_capacity[cell] - state.fronthaul_used[cell];
  if (fec_rem <= 0.0 || fronthaul_rem <= 0.0) return kInf;
  return inst.fec_grant(i) / fec_rem + inst.fronthaul_rate(i) / fronthaul_rem;
}

double nec_footprint(const Instance& inst, const RunningState& state, int i) {
  const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);
  const double nec_rem = inst.nec_capacity[cell] - state.nec_used[cell];
  if (nec_rem <= 0.0) return kInf;
  return inst.nec_grant(i) / nec_rem;
}

// ---------------------------------------------------------------------------
// Exact branch and bound.
// ---------------------------------------------------------------------------

struct ExactSearch {
  const Instance& inst;
  bool allow_nec;
  std::vector<Decision> decisions;
  double fec_used = 0.0;
  std::vector<double> nec_used;
  std::vector<double> fronthaul_used;
  int accepted = 0;
  int best_objective = -1;
  std::vector<Decision> best;

  ExactSearch(const Instance& instance, bool nec)
      : inst(instance),
        allow_nec(nec),
        decisions(static_cast<size_t>(instance.size()), Decision::REJECT),
        nec_used(instance.nec_capacity.size(), 0.0),
        fronthaul_used(instance.fronthaul_capacity.size(), 0.0) {}

  // Tasks are decided in canonical index order, so the running sums add
  // grants in exactly the audit's summation order. Backtracking restores the
  // saved values instead of subtracting, keeping the sums bit-exact.
  void search(int i) {
    const int n = inst.size();
    if (accepted + (n - i) <= best_objective) return;  // cardinality bound
    if (i == n) {
      best_objective = accepted;
      best = decisions;
      return;
    }
    const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);

    // Choice order FEC < NEC < REJECT: with strict-improvement recording the
    // first optimum reached is the lexicographically first one.
    if (inst.fec_ok[static_cast<size_t>(i)]) {
      const double new_fec = fec_used + inst.fec_grant(i);
      const double new_fronthaul = fronthaul_used[cell] + inst.fronthaul_rate(i);
      if (leq_within_slack(new_fec, inst.scenario->fec_capacity) &&
          leq_within_slack(new_fronthaul, inst.fronthaul_capacity[cell])) {
        const double saved_fec = fec_used;
        const double saved_fronthaul = fronthaul_used[cell];
        fec_used = new_fec;
        fronthaul_used[cell] = new_fronthaul;
        decisions[static_cast<size_t>(i)] = Decision::FEC;
        ++accepted;
        search(i + 1);
        --accepted;
        decisions[static_cast<size_t>(i)] = Decision::REJECT;
        fec_used = saved_fec;
        fronthaul_used[cell] = saved_fronthaul;
      }
    }

    if (allow_nec && inst.nec_ok[static_cast<size_t>(i)]) {
      const double new_nec = nec_used[cell] + inst.nec_grant(i);
      if (leq_within_slack(new_nec, inst.nec_capacity[cell])) {
        const double saved_nec = nec_used[cell];
        nec_used[cell] = new_nec;
        decisions[static_cast<size_t>(i)] = Decision::NEC;
        ++accepted;
        search(i + 1);
        --accepted;
        decisions[static_cast<size_t>(i)] = Decision::REJECT;
        nec_used[cell] = saved_nec;
      }
    }

    search(i + 1);  // REJECT
  }
};

std::vector<Decision> run_exact(const Instance& inst, const SolverConfig& config,
                                bool allow_nec) {
  int limit = config.exact_task_limit;
  if (limit < 1) {
    throw std::invalid_argument("solve_exact: exact_task_limit must be >= 1");
  }
  if (limit > kExactTaskHardCap) {
    std::fprintf(stderr,
                 "solve_exact: exact_task_limit %d exceeds the hard cap, using %d\n",
                 limit, kExactTaskHardCap);
    limit = kExactTaskHardCap;
  }
  if (inst.size() > limit) {
    throw InstanceTooLargeError("instance too large for exact solver: " +
                                std::to_string(inst.size()) + " tasks > limit " +
                                std::to_string(limit));
  }
  ExactSearch search(inst, allow_nec);
  search.search(0);
  return search.best;
}

// ---------------------------------------------------------------------------
// Greedy heuristics.
// ---------------------------------------------------------------------------

// Tries the task on `first` then `second`; returns the decision made.
Decision try_place(const Instance& inst, std::vector<Decision>& decisions,
                   RunningState& state, int i, Target first, bool try_second,
                   Target second) {
  const CanonicalFit fit{inst, decisions};
  for (int attempt = 0; attempt < (try_second ? 2 : 1); ++attempt) {
    const Target target = attempt == 0 ? first : second;
    if (target == Target::FEC) {
      if (inst.fec_ok[static_cast<size_t>(i)] && fit.fits_fec(i)) {
        decisions[static_cast<size_t>(i)] = Decision::FEC;
        state.place(inst, i, Decision::FEC);
        return Decision::FEC;
      }
    } else {
      if (inst.nec_ok[static_cast<size_t>(i)] && fit.fits_nec(i)) {
        decisions[static_cast<size_t>(i)] = Decision::NEC;
        state.place(inst, i, Decision::NEC);
        return Decision::NEC;
      }
    }
  }
  return Decision::REJECT;
}

std::vector<Decision> run_min_footprint(const Instance& inst, bool allow_nec) {
  const int n = inst.size();
  std::vector<Decision> decisions(static_cast<size_t>(n), Decision::REJECT);
  RunningState state(inst);

  // Ordering pass: best footprint per task against the full capacities.
  std::vector<double> order_score(static_cast<size_t>(n), kInf);
  for (int i = 0; i < n; ++i) {
    double best = kInf;
    if (inst.fec_ok[static_cast<size_t>(i)]) {
      best = std::min(best, fec_footprint(inst, state, i));
    }
    if (allow_nec && inst.nec_ok[static_cast<size_t>(i)]) {
      best = std::min(best, nec_footprint(inst, state, i));
    }
    order_score[static_cast<size_t>(i)] = best;
  }
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double sa = order_score[static_cast<size_t>(a)];
    const double sb = order_score[static_cast<size_t>(b)];
    if (sa != sb) return sa < sb;
    return a < b;  // canonical index = lexicographic task key
  });

  // Placement pass: cheapest current target first, then the other.
  for (const int i : order) {
    const double fp_fec =
        inst.fec_ok[static_cast<size_t>(i)] ? fec_footprint(inst, state, i) : kInf;
    const double fp_nec = allow_nec && inst.nec_ok[static_cast<size_t>(i)]
                              ? nec_footprint(inst, state, i)
                              : kInf;
    const Target first = fp_fec <= fp_nec ? Target::FEC : Target::NEC;
    const Target second = first == Target::FEC ? Target::NEC : Target::FEC;
    const bool try_second = allow_nec || second == Target::FEC;
    try_place(inst, decisions, state, i, first, try_second, second);
  }

  // Rescue pass over rejected tasks in canonical order. Nothing freed any
  // capacity, but the ordering pass judged placements against full
  // capacities, so the end state can admit a task the main pass skipped.
  for (int i = 0; i < n; ++i) {
    if (decisions[static_cast<size_t>(i)] != Decision::REJECT) continue;
    const double fp_fec =
        inst.fec_ok[static_cast<size_t>(i)] ? fec_footprint(inst, state, i) : kInf;
    const double fp_nec = allow_nec && inst.nec_ok[static_cast<size_t>(i)]
                              ? nec_footprint(inst, state, i)
                              : kInf;
    const Target first = fp_fec <= fp_nec ? Target::FEC : Target::NEC;
    const Target second = first == Target::FEC ? Target::NEC : Target::FEC;
    const bool try_second = allow_nec || second == Target::FEC;
    try_place(inst, decisions, state, i, first, try_second, second);
  }

  return decisions;
}

std::vector<Decision> run_penalty(const Instance& inst, bool allow_nec) {
  const int n = inst.size();
  std::vector<Decision> decisions(static_cast<size_t>(n), Decision::REJECT);
  RunningState state(inst);
  std::vector<char> assigned(static_cast<size_t>(n), 0);
  std::set<std::pair<int, int>> banned;  // (task, 0=FEC/1=NEC); usage only grows

  // Penalty of placing task i: grant vector · (usage / remaining capacity)
  // over the target's dimensions, with the current running usage.
  const auto penalty = [&](int i, Target target) -> double {
    const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);
    if (target == Target::FEC) {
      const double fec_rem = inst.scenario->fec_capacity - state.fec_used;
      const double fronthaul_rem =
          inst.fronthaul_capacity[cell] - state.fronthaul_used[cell];
      if (fec_rem <= 0.0 || fronthaul_rem <= 0.0) return kInf;
      return inst.fec_grant(i) * state.fec_used / fec_rem +
             inst.fronthaul_rate(i) * state.fronthaul_used[cell] / fronthaul_rem;
    }
    const double nec_rem = inst.nec_capacity[cell] - state.nec_used[cell];
    if (nec_rem <= 0.0) return kInf;
    return inst.nec_grant(i) * state.nec_used[cell] / nec_rem;
  };

  // Cheap screen with running sums; the winner is re-checked canonically.
  const auto roughly_fits = [&](int i, Target target) -> bool {
    const size_t cell = static_cast<size_t>(inst.cell_pos[static_cast<size_t>(i)]);
    if (target == Target::FEC) {
      return inst.fec_ok[static_cast<size_t>(i)] &&
             leq_within_slack(state.fec_used + inst.fec_grant(i),
                              inst.scenario->fec_capacity) &&
             leq_within_slack(state.fronthaul_used[cell] + inst.fronthaul_rate(i),
                              inst.fronthaul_capacity[cell]);
    }
    return allow_nec && inst.nec_ok[static_cast<size_t>(i)] &&
           leq_within_slack(state.nec_used[cell] + inst.nec_grant(i),
                            inst.nec_capacity[cell]);
  };

  while (true) {
    int best_task = -1;
    Target best_target = Target::FEC;
    double best_score = kInf;
    bool found = false;

    for (int i = 0; i < n; ++i) {
      if (assigned[static_cast<size_t>(i)]) continue;
      for (const Target target : {Target::FEC, Target::NEC}) {
        const int target_rank = target == Target::FEC ? 0 : 1;
        if (banned.count({i, target_rank})) continue;
        if (!roughly_fits(i, target)) continue;
        const double score = penalty(i, target);
        // Strict < keeps the earliest (task, FEC-first) candidate on ties.
        if (!found || score < best_score) {
          found = true;
          best_score = score;
          best_task = i;
          best_target = target;
        }
      }
    }
    if (!found) break;

    const CanonicalFit fit{inst, decisions};
    const bool ok = best_target == Target::FEC ? fit.fits_fec(best_task)
                                               : fit.fits_nec(best_task);
    if (!ok) {
      // Running sums and the canonical re-sum disagreed by rounding; the
      // dimension only fills further, so this pair stays banned.
      banned.insert({best_task, best_target == Target::FEC ? 0 : 1});
      continue;
    }

    const Decision d = best_target == Target::FEC ? Decision::FEC : Decision::NEC;
    decisions[static_cast<size_t>(best_task)] = d;
    state.place(inst, best_task, d);
    assigned[static_cast<size_t>(best_task)] = 1;
  }

  return decisions;
}

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

AllocationResult solve_with(const Scenario& scenario, const SolverConfig& config,
                            bool exact, bool allow_nec) {
  const auto issues = validate_scenario(scenario);
  if (!issues.empty()) {
    throw std::invalid_argument("solve: scenario is not well-formed: " + issues.front());
  }
  const auto started = std::chrono::steady_clock::now();
  const Instance inst(scenario);

  std::vector<Decision> decisions;
  if (exact) {
    decisions = run_exact(inst, config, allow_nec);
  } else if (config.greedy_scoring == GreedyScoring::MIN_FOOTPRINT) {
    decisions = run_min_footprint(inst, allow_nec);
  } else {
    decisions = run_penalty(inst, allow_nec);
  }

  std::vector<std::pair<TaskKey, Decision>> pairs;
  pairs.reserve(decisions.size());
  for (size_t i = 0; i < decisions.size(); ++i) {
    pairs.emplace_back(inst.tasks[i].key, decisions[i]);
  }
  Assignment assignment = Assignment::for_scenario(scenario, pairs);

  const std::string label = solver_label(config);
  const ConstraintReport report = audit(scenario, assignment);
  if (!report.feasible()) {
    throw std::logic_error("internal: solver '" + label + "' produced " +
                           std::to_string(report.violations.size()) +
                           " constraint violation(s)");
  }

  const double rate = success_rate(scenario, assignment);
  ResourceUsage usage = compute_usage(scenario, assignment);
  const int objective = assignment.accepted_count();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  return AllocationResult{std::move(assignment), objective, rate,
                          std::move(usage),      label,     elapsed.count()};
}

}  // namespace

AllocationResult solve_exact(const Scenario& scenario, const SolverConfig& config) {
  return solve_with(scenario, config, /*exact=*/true, /*allow_nec=*/true);
}

AllocationResult solve_greedy(const Scenario& scenario, const SolverConfig& config) {
  return solve_with(scenario, config, /*exact=*/false, /*allow_nec=*/true);
}

AllocationResult solve_fec_only(const Scenario& scenario, const SolverConfig& config) {
  const bool exact = config.solver == SolverMode::FEC_ONLY_EXACT ||
                     config.solver == SolverMode::EXACT;
  return solve_with(scenario, config, exact, /*allow_nec=*/false);
}

AllocationResult solve(const Scenario& scenario, const SolverConfig& config) {
  switch (config.solver) {
    case SolverMode::EXACT:
      return solve_exact(scenario, config);
    case SolverMode::GREEDY:
      return solve_greedy(scenario, config);
    case SolverMode::FEC_ONLY_EXACT:
    case SolverMode::FEC_ONLY_GREEDY:
      return solve_fec_only(scenario, config);
  }
  throw std::invalid_argument("solve: unknown solver mode");
}

std::string solver_label(const SolverConfig& config) {
  const char* scoring = config.greedy_scoring == GreedyScoring::MIN_FOOTPRINT
                            ? "min-footprint"
                            : "penalty";
  switch (config.solver) {
    case SolverMode::EXACT:
      return "exact";
    case SolverMode::GREEDY:
      return std::string("greedy-") + scoring;
    case SolverMode::FEC_ONLY_EXACT:
      return "fec-only-exact";
    case SolverMode::FEC_ONLY_GREEDY:
      return std::string("fec-only-greedy-") + scoring;
  }
  return "unknown";
}

bool solver_mode_from_string(const std::string& text, SolverMode& mode) {
  if (text == "exact") mode = SolverMode::EXACT;
  else if (text == "greedy") mode = SolverMode::GREEDY;
  else if (text == "fec-only-exact") mode = SolverMode::FEC_ONLY_EXACT;
  else if (text == "fec-only-greedy") mode = SolverMode::FEC_ONLY_GREEDY;
  else return false;
  return true;
}

bool greedy_scoring_from_string(const std::string& text, GreedyScoring& scoring) {
  if (text == "min-footprint") scoring = GreedyScoring::MIN_FOOTPRINT;
  else if (text == "penalty") scoring = GreedyScoring::PENALTY;
  else return false;
  return true;
}

}  // namespace nfcran
