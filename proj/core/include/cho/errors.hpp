#pragma once

#include <stdexcept>
#include <string>

namespace cho {

/// Base class for every failure mode of the eigenvalue machinery.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The series summation exceeded its term ceiling; indicates a precision
/// policy bug, not a mathematical failure.
struct NonConvergence final : SolverError {
  using SolverError::SolverError;
};

/// The upward energy scan hit its safety bound without finding the
/// requested root.
struct ScanExhausted final : SolverError {
  using SolverError::SolverError;
};

/// Precision escalation reached max_working_digits before the stopping
/// rule was satisfied.
struct PrecisionExceeded final : SolverError {
  using SolverError::SolverError;
};

/// The converged eigenfunction has the wrong number of interior nodes
/// (converged to the wrong root).
struct NodeMismatch final : SolverError {
  using SolverError::SolverError;
};

/// Two states that must share a spectrum produced different eigenvalues.
struct DegeneracyViolation final : SolverError {
  using SolverError::SolverError;
};

}  // namespace cho
