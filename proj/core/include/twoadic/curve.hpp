#pragma once

#include <string_view>

#include "twoadic/exactnum.hpp"
#include "twoadic/polynomial.hpp"

namespace twoadic {

/// Short Weierstrass model y^2 = x^3 + a x + b over Q with cached
/// discriminant -16(4a^3 + 27b^2) and j-invariant -1728(4a)^3 / delta.
/// Construction fails with SingularCurve when the discriminant vanishes.
class CurveQ {
 public:
  CurveQ(Rational a, Rational b);

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] const Rational& discriminant() const { return delta_; }
  [[nodiscard]] const Rational& j_invariant() const { return j_; }

  /// x^3 + a x + b, the x-coordinates of the nontrivial 2-torsion.
  [[nodiscard]] RatPolynomial two_torsion_cubic() const;

  friend bool operator==(const CurveQ& l, const CurveQ& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

 private:
  Rational a_, b_, delta_, j_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct GeneralWeierstrass {
  Rational a1, a2, a3, a4, a6;
};

/// Q-isomorphic short model y^2 = x^3 - 27 c4 x - 54 c6. Its discriminant is
/// 6^12 times the discriminant of the general model.
CurveQ from_general(const GeneralWeierstrass& w);

/// y^2 = x^3 + d^2 a x + d^3 b. Throws std::invalid_argument when d == 0.
CurveQ quadratic_twist(const CurveQ& e, const Rational& d);

/// -4 t^3 (t + 8).
Rational family_j(const Rational& t);

/// y^2 = x^3 - (3t^2+24t)/(t^2-4t+12) x - (2t^2+28t+96)/(t^2-4t+12),
/// with j-invariant family_j(t). Throws FamilyExcludedParameter at t = -8.
CurveQ family_curve(const Rational& t);

/// Parses "a,b" or "a1,a2,a3,a4,a6"; each field is a rational "p" or "p/q".
/// Five-coefficient input is reduced with from_general. Throws ParseError or
/// SingularCurve.
CurveQ parse_curve_spec(std::string_view spec);

}  // namespace twoadic
