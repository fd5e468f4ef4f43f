#pragma once

#include <stdexcept>
#include <string>

namespace ggp {

/// Bad input: wrong dimensions, non-Hermitian operators, non-tangent vectors,
/// malformed curves. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Input is well formed but the requested quantity is undefined there
/// (null states, vanishing overlaps, chart singularities). Maps to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (psi, O psi) vanishes within null_tol: no O-normalisation exists.
class NullStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An O-overlap or trace whose argument is required vanishes.
class DegenerateOverlapError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Point lies outside the domain of a local chart.
class ChartDomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Kahler denominator reached (or crossed) zero.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ggp
