#pragma once

#include <stdexcept>
#include <string>

namespace dgibbs {

/// Vector/matrix sizes do not agree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix used as a precision (or Hessian) is not positive definite.
struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative solver exhausted its sweep budget.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The feasible line segment is empty: the chain state violates the support.
struct EmptyInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A truncation interval carries too little probability mass to sample from.
struct DegenerateInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coordinate-scan weights are negative or do not sum to one.
struct InvalidWeights : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The operation is only implemented for specific dimensions.
struct UnsupportedDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The directional curvature e'He is not positive.
struct NonPositiveCurvature : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A series is constant, so autocorrelations are undefined.
struct ZeroVariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad run configuration (CLI flags, target spec files).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be read, written, or parsed.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dgibbs
