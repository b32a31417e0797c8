#pragma once

#include <stdexcept>

namespace geomphase {

// A matrix or Bloch vector violates the density-operator constraints.
struct InvalidStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Full-rank purification requested for a rank-deficient state.
struct BundleUndefinedError : std::domain_error {
  using std::domain_error::domain_error;
};

// Equatorial polar angle requested at (or across) the maximally mixed point.
struct UndefinedAngleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Band eigenstate requested at a gap closure.
struct UndefinedStateError : std::domain_error {
  using std::domain_error::domain_error;
};

// Geometric phase has no value here: center passage, degenerate spectrum,
// or a node sitting exactly at the curve closure.
struct UndefinedPhaseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Failure inside a numerical kernel; what() carries diagnostics.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BracketError : NumericError {
  using NumericError::NumericError;
};

struct ConvergenceError : NumericError {
  using NumericError::NumericError;
};

struct UndersampledError : NumericError {
  using NumericError::NumericError;
};

}  // namespace geomphase
