#pragma once

#include <stdexcept>

namespace nfcran {

/// Assignment keys do not match the scenario's task set.
struct TaskSetMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact solver refused an instance above its task limit.
struct InstanceTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requires a feasible assignment but the audit found violations.
struct InfeasibleAssignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nfcran
