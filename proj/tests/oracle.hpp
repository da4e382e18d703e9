#pragma once

#include <vector>

#include "nfcran/model.hpp"

namespace nfcran::testing {

struct OracleOutcome {
  int best_objective = -1;
  // Lexicographically first maximizer, FEC < NEC < REJECT per task in
  // (cell_id, ue_index) order.
  std::vector<Decision> best_decisions;
  long feasible_count = 0;
};

/// Exhaustive reference solver: walks all 3^n decision vectors (2^n when
/// allow_nec is false) in lexicographic order and keeps the first one with
/// the highest accepted count. Feasibility is evaluated with plain restated
/// sums, independent of the solver implementation. Only for small n.
OracleOutcome enumerate_best(const Scenario& scenario, bool allow_nec);

/// Same feasibility predicate the enumerator uses, exposed for tests.
bool oracle_feasible(const Scenario& scenario, const std::vector<Decision>& decisions);

}  // namespace nfcran::testing
