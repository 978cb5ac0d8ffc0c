#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "twoadic/errors.hpp"
#include "twoadic/resolvent.hpp"

using namespace twoadic;
using cd = std::complex<double>;

namespace {

std::vector<cd> sorted(std::vector<cd> v) {
  std::sort(v.begin(), v.end(), [](cd l, cd r) { return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag(); });
  return v;
}

double multiset_distance(std::vector<cd> l, std::vector<cd> r) {
  // Greedy matching is enough for well-separated values.
  double worst = 0;
  for (const cd& x : l) {
    auto it = std::min_element(r.begin(), r.end(), [&](cd p, cd q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*it - x));
    r.erase(it);
  }
  return worst;
}

}  // namespace

TEST_CASE("resolvent at (0,1) and the hand-checked discriminant") {
  const CurveQ e(Rational(0), Rational(1));
  const RatPolynomial f = f_resolvent(e);
  CHECK(f == RatPolynomial({Rational(0), Rational(216), Rational(0), Rational(0), Rational(1)}));
  CHECK(discriminant(f) == Rational(729) * -432 * -432 * -432);
  CHECK(disc_identity_check(Rational(0), Rational(1)));
}

TEST_CASE("psi4 roots are x-coordinates of exact order 4 points") {
  const CurveQ e(Rational(2), Rational(3));
  const TorsionBasis basis = complex_4torsion_basis(e);
  CHECK(basis.psi_roots.size() == 6);
  const ComplexCurve c(e);
  for (const ComplexPoint& p : {basis.p, basis.q}) {
    CHECK(c.on_curve_residual(p) < 1e-8);
    const ComplexPoint twice = c.doubled(p);
    CHECK_FALSE(twice.at_infinity);
    CHECK(std::abs(twice.y) < 1e-6);
    CHECK(c.doubled(twice).at_infinity);
  }
}

TEST_CASE("complex group law: associativity and inverses at random points") {
  const ComplexCurve c(cd(-2.0, 0.5), cd(1.0, -1.0), 1e-9);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2, 2);
  auto point = [&] {
    const cd x(u(rng), u(rng));
    return ComplexPoint::affine(x, std::sqrt(c.rhs(x)));
  };
  for (int i = 0; i < 50; ++i) {
    const ComplexPoint p = point(), q = point(), r = point();
    const ComplexPoint left = c.add(c.add(p, q), r), right = c.add(p, c.add(q, r));
    CHECK(std::abs(left.x - right.x) < 1e-6 * (1 + std::abs(left.x)));
    CHECK(c.add(p, c.negate(p)).at_infinity);
    CHECK(c.on_curve_residual(c.add(p, q)) < 1e-6 * (1 + std::norm(c.add(p, q).x) * std::abs(c.add(p, q).x)));
  }
}

TEST_CASE("theta values at (0,1) are the resolvent roots times the fixed scale") {
  const CurveQ e(Rational(0), Rational(1));
  const ThetaData d = compute_theta(e);
  REQUIRE(d.theta.size() == 4);
  const double s = kThetaNormalization.get_d();
  const double r3 = 3 * std::sqrt(3.0);
  const std::vector<cd> roots{cd(0), cd(-6), cd(3, r3), cd(3, -r3)};
  std::vector<cd> scaled;
  for (cd t : d.theta) scaled.push_back(t / s);
  CHECK(multiset_distance(scaled, roots) < 1e-6);
}

TEST_CASE("the normalization constant is pinned") {
  CHECK(kThetaNormalization == 8);
  CHECK(kActionConvention == ActionConvention::column);
  const auto m = resolvent_identity_check(CurveQ(Rational(0), Rational(1)));
  CHECK(m.scale == kThetaNormalization);
  CHECK(m.max_coeff_deviation < 1e-6);
  for (const auto& [scale, dev] : m.candidates)
    if (scale != kThetaNormalization) CHECK(dev > 1e-6);
}

TEST_CASE("transpose convention does not reproduce the resolvent") {
  const CurveQ e(Rational(0), Rational(1));
  const TorsionBasis basis = complex_4torsion_basis(e);
  const double r3 = 3 * std::sqrt(3.0);
  const std::vector<cd> roots{cd(0), cd(-6), cd(3, r3), cd(3, -r3)};
  bool matched = false;
  try {
    const ThetaData d = theta_sums(e, basis, exceptional_cosets(), {}, ActionConvention::transpose);
    for (const Rational& s : candidate_theta_scales()) {
      std::vector<cd> expected;
      for (cd r : roots) expected.push_back(s.get_d() * r);
      matched |= multiset_distance(d.theta, expected) < 1e-6 * 100;
    }
  } catch (const NumericalFailure&) {
    matched = false;
  }
  CHECK_FALSE(matched);
}

TEST_CASE("theta multiset is unchanged under P -> -P") {
  for (auto [a, b] : {std::pair{1, 1}, {2, -3}, {-5, 7}, {0, 5}}) {
    const CurveQ e{Rational(a), Rational(b)};
    const ThetaData d = compute_theta(e), f = compute_theta(e, {}, true);
    CHECK(multiset_distance(d.theta, f.theta) < 1e-6 * (1 + std::abs(d.theta[0])));
  }
}

TEST_CASE("theta scales by s^2 under a -> s^2 a, b -> s^3 b") {
  for (int s : {2, 3}) {
    const CurveQ e(Rational(3), Rational(-2)), scaled(Rational(3 * s * s), Rational(-2 * s * s * s));
    std::vector<cd> expected;
    double size = 1;
    for (cd t : compute_theta(e).theta) {
      expected.push_back(double(s * s) * t);
      size = std::max(size, std::abs(expected.back()));
    }
    CHECK(multiset_distance(sorted(expected), sorted(compute_theta(scaled).theta)) < 1e-6 * size);
  }
}

TEST_CASE("exceptional cosets partition GL2(Z/4)") {
  const auto cosets = exceptional_cosets();
  REQUIRE(cosets.size() == 4);
  std::size_t total = 0;
  for (const auto& c : cosets) total += c.size();
  CHECK(total == 96);
}

TEST_CASE("discriminant and guard identities over random rationals") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int i = 0; i < 60; ++i) {
    long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0) continue;
    const Rational a = make_rational(dist(rng), d1), b = make_rational(dist(rng), d2);
    if (4 * a * a * a + 27 * b * b == 0) continue;
    CHECK(disc_identity_check(a, b));
    if (a != 0) CHECK(guard_identity_check(a, b));
  }
}

TEST_CASE("u_to_j composed with t = 12/(u-1) is the family j") {
  for (long n = -10; n <= 10; ++n) {
    const Rational t = make_rational(n, 7);
    if (t == 0) continue;
    const Rational u = 12 / t + 1;
    CHECK(u_to_j(u) == -4 * t * t * t * (t + 8));
  }
}

TEST_CASE("lemma equivalence on family curves and on generic curves") {
  for (long n = 1; n <= 12; ++n) {
    const CurveQ e = family_curve(make_rational(n, 5));
    if (e.a() == 0 || e.b() == 0) continue;
    const LemmaCheck c = lemma_equivalence_check(e);
    CHECK(c.holds());
    CHECK(c.f_has_rational_root);
    CHECK(c.j_in_family);
  }
  const LemmaCheck g = lemma_equivalence_check(CurveQ(Rational(1), Rational(1)));
  CHECK(g.holds());
  CHECK_FALSE(g.j_in_family);
  CHECK_THROWS(lemma_equivalence_check(CurveQ(Rational(0), Rational(1))));
}

TEST_CASE("a = 0 regression: f(0) = 0 and j = 0") {
  const CurveQ e(Rational(0), Rational(-7));
  CHECK(f_resolvent(e).evaluate(Rational(0)) == 0);
  CHECK(e.j_invariant() == 0);
}
