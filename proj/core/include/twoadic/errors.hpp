#pragma once

#include <stdexcept>
#include <string>

namespace twoadic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (curve specs, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// 4a^3 + 27b^2 = 0, or a general model whose reduced discriminant vanishes.
class SingularCurve : public Error {
 public:
  using Error::Error;
};

/// t = -8 passed to the parametric family.
class FamilyExcludedParameter : public Error {
 public:
  using Error::Error;
};

/// Root residuals or point separations fell below the tolerance floor.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Two coset sums are numerically indistinguishable.
class ThetaCollision : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// No candidate normalization of f reproduces the numerical quartic.
class NoNormalizationMatches : public Error {
 public:
  using Error::Error;
};

/// A supposed generating set does not generate the group it was claimed for.
class GeneratorSetInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace twoadic
