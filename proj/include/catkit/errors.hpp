#ifndef CATKIT_ERRORS_HPP
#define CATKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catkit {

/// Base class for all domain errors thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The truncated Fock space is too small for the requested amplitude.
struct TruncationError : Error {
  using Error::Error;
};

/// Odd cat state requested at vanishing amplitude (no such state).
struct DegenerateCatError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

/// Kraus set does not resolve the identity to the required tolerance.
struct KrausIncomplete : Error {
  using Error::Error;
};

/// Doubling the quadrature nodes still moves witness expectations.
struct QuadratureUnderresolved : Error {
  using Error::Error;
};

struct OptimizationFailure : Error {
  using Error::Error;
};

/// Gaussian minimum vanished; the catability ratio is undefined.
struct DegenerateDenominator : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct ZeroMass : Error {
  using Error::Error;
};

/// Series evaluated outside its convergence region (|p| >= m).
struct DivergentRegime : Error {
  using Error::Error;
};

struct NoRevivalFound : Error {
  using Error::Error;
};

struct AliasedSampling : Error {
  using Error::Error;
};

struct InvalidSpin : Error {
  using Error::Error;
};

}  // namespace catkit

#endif
