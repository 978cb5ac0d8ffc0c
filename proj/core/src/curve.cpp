#include "twoadic/curve.hpp"

#include <string>
#include <vector>

#include "twoadic/errors.hpp"

namespace twoadic {

CurveQ::CurveQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  const Rational inner = 4 * a_ * a_ * a_ + 27 * b_ * b_;
  if (inner == 0) throw SingularCurve("singular curve: 4a^3 + 27b^2 = 0 for a = " + to_string(a_) + ", b = " + to_string(b_));
  delta_ = -16 * inner;
  const Rational four_a = 4 * a_;
  j_ = -1728 * four_a * four_a * four_a / delta_;
}

RatPolynomial CurveQ::two_torsion_cubic() const { return RatPolynomial{b_, a_, Rational(0), Rational(1)}; }

CurveQ from_general(const GeneralWeierstrass& w) {
  const Rational b2 = w.a1 * w.a1 + 4 * w.a2;
  const Rational b4 = 2 * w.a4 + w.a1 * w.a3;
  const Rational b6 = w.a3 * w.a3 + 4 * w.a6;
  const Rational c4 = b2 * b2 - 24 * b4;
  const Rational c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  return CurveQ(Rational(-27 * c4), Rational(-54 * c6));
}

CurveQ quadratic_twist(const CurveQ& e, const Rational& d) {
  if (d == 0) throw std::invalid_argument("quadratic twist by zero");
  const Rational d2 = d * d;
  return CurveQ(Rational(d2 * e.a()), Rational(d2 * d * e.b()));
}

Rational family_j(const Rational& t) { return -4 * t * t * t * (t + 8); }

CurveQ family_curve(const Rational& t) {
  if (t == -8) throw FamilyExcludedParameter("family parameter t = -8 gives the cuspidal curve y^2 = x^3");
  // t^2 - 4t + 12 = (t-2)^2 + 8 > 0.
  const Rational den = t * t - 4 * t + 12;
  const Rational a = -(3 * t * t + 24 * t) / den;
  const Rational b = -(2 * t * t + 28 * t + 96) / den;
  return CurveQ(a, b);
}

CurveQ parse_curve_spec(std::string_view spec) {
  std::vector<Rational> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = spec.find(',', start);
    fields.push_back(parse_rational(spec.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() == 2) return CurveQ(fields[0], fields[1]);
  if (fields.size() == 5) return from_general({fields[0], fields[1], fields[2], fields[3], fields[4]});
  throw ParseError("curve spec needs 2 or 5 comma-separated rationals, got " + std::to_string(fields.size()));
}

}  // namespace twoadic
