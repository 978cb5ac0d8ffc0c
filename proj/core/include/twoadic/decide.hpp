#pragma once

// Surjectivity of the mod 2, mod 4 and mod 8 representations of y^2 = x^3+ax+b:
//
//   mod 2  surjective  iff  x^3+ax+b irreducible and delta not a square;
//   mod 4  surjective  iff  mod 2 surjective, delta not in -1*Q^2, and
//                           j != -4t^3(t+8) for every rational t;
//   mod 8  surjective  iff  mod 4 surjective and delta not in +-2*Q^2.
//
// Every failure carries a witness that re-verifies with exact arithmetic.

#include <optional>
#include <variant>
#include <vector>

#include "twoadic/curve.hpp"

namespace twoadic {

/// x^3 + a x + b vanishes at x0.
struct CubicRationalRoot {
  Rational x0;
  friend bool operator==(const CubicRationalRoot&, const CubicRationalRoot&) = default;
};

/// delta == c * r^2 with r > 0, c in {1, -1, 2, -2}.
struct DiscriminantInClass {
  int c = 1;
  Rational r;
  friend bool operator==(const DiscriminantInClass&, const DiscriminantInClass&) = default;
};

/// j == -4 t^3 (t + 8).
struct JInFamily {
  Rational t;
  friend bool operator==(const JInFamily&, const JInFamily&) = default;
};

/// The representation at this lower level is already not surjective.
struct InheritedFailure {
  int level = 2;
  friend bool operator==(const InheritedFailure&, const InheritedFailure&) = default;
};

using Obstruction = std::variant<CubicRationalRoot, DiscriminantInClass, JInFamily, InheritedFailure>;

struct SurjectivityReport {
  int level = 2;
  bool surjective = true;
  std::vector<Obstruction> obstructions;

  friend bool operator==(const SurjectivityReport&, const SurjectivityReport&) = default;
};

struct Analysis {
  SurjectivityReport mod2, mod4, mod8;
  /// Same as the mod 8 verdict: beyond level 8 nothing new can fail.
  bool two_adic_surjective = false;
};

SurjectivityReport mod2_surjective(const CurveQ& e);
SurjectivityReport mod4_surjective(const CurveQ& e);
SurjectivityReport mod8_surjective(const CurveQ& e);
Analysis analyze(const CurveQ& e);

/// First rational t (in rational_roots candidate order) with
/// -4t^3(t+8) == j, from the rational roots of the
/// cleared quartic 4Q t^4 + 32Q t^3 + P where j = P/Q.
std::optional<Rational> family_parameter(const Rational& j);

/// Re-checks a witness against the curve by exact arithmetic. An inherited
/// failure is checked by recomputing the lower-level verdict.
bool verify_obstruction(const CurveQ& e, const Obstruction& o);

}  // namespace twoadic
