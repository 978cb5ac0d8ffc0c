#include "twoadic/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twoadic/complex_roots.hpp"
#include "twoadic/decide.hpp"
#include "twoadic/errors.hpp"

namespace twoadic {

// ---------------------------------------------------------------- exact side

RatPolynomial psi4_primitive(const CurveQ& e) {
  const Rational& a = e.a();
  const Rational& b = e.b();
  return RatPolynomial{Rational(-(a * a * a + 8 * b * b)), Rational(-4 * a * b), Rational(-5 * a * a), Rational(20 * b),
                       Rational(5 * a), Rational(0), Rational(1)};
}

RatPolynomial f_resolvent(const CurveQ& e) {
  const Rational& a = e.a();
  const Rational& b = e.b();
  const Rational a2 = a * a;
  return RatPolynomial{Rational(17 * a2 * a2 + 108 * a * b * b), Rational(4 * (7 * a2 * a + 54 * b * b)), Rational(6 * a2),
                       Rational(-4 * a), Rational(1)};
}

bool disc_identity_check(const Rational& a, const Rational& b) {
  const CurveQ e(a, b);
  const Rational& delta = e.discriminant();
  return discriminant(f_resolvent(e)) == 729 * b * b * delta * delta * delta;
}

bool guard_identity_check(const Rational& a, const Rational& b) {
  if (a == 0) throw std::invalid_argument("guard identity needs a != 0");
  const CurveQ e(a, b);
  return f_resolvent(e).evaluate(a) == -3 * a * e.discriminant() / 4;
}

Rational u_to_j(const Rational& u) {
  if (u == 1) throw std::invalid_argument("u = 1 has no j-invariant");
  const Rational d = u - 1;
  const Rational d2 = d * d;
  return -27648 * (2 * u + 1) / (d2 * d2);
}

LemmaCheck lemma_equivalence_check(const CurveQ& e) {
  if (e.a() == 0 || e.b() == 0) throw std::invalid_argument("lemma check needs a != 0 and b != 0");
  LemmaCheck out;
  const Rational& j = e.j_invariant();

  const auto roots = rational_roots(clear_denominators(f_resolvent(e)));
  out.f_has_rational_root = !roots.empty();
  const auto t_family = family_parameter(j);
  out.j_in_family = t_family.has_value();

  if (out.f_has_rational_root) {
    const Rational& r = roots.front();
    const Rational u = r / e.a();
    out.forward_chain_verified = false;
    if (u != 1) {
      const Rational t = 12 / (u - 1);
      out.witness = LemmaWitness{r, u, t};
      out.forward_chain_verified = u_to_j(u) == j && family_j(t) == j;
    }
  }
  if (t_family) {
    out.reverse_chain_verified = false;
    if (*t_family != 0) {
      const Rational u = 12 / *t_family + 1;
      out.reverse_chain_verified = f_resolvent(e).evaluate(Rational(e.a() * u)) == 0;
    }
  }
  return out;
}

// -------------------------------------------------------------- numeric side

namespace {

template <class Real>
struct Basis {
  BasicComplexPoint<Real> p, q;
  std::vector<std::complex<Real>> roots;
  Real max_residual = 0;
};

template <class Real>
std::complex<Real> to_complex(const Rational& q) {
  return std::complex<Real>(static_cast<Real>(q.get_d()));
}

template <class Real>
Basis<Real> basis_impl(const CurveQ& e, const NumericTolerances& tol, bool flip_p) {
  using C = std::complex<Real>;
  const RatPolynomial psi = psi4_primitive(e);
  std::vector<C> coeffs;
  for (std::size_t i = 0; i <= 6; ++i) coeffs.push_back(to_complex<Real>(psi.coeff(i)));
  const std::span<const C> cs(coeffs);

  Basis<Real> out;
  out.roots = polynomial_roots<Real>(cs);
  for (const C& x : out.roots) {
    const Real res = residual<Real>(cs, x);
    out.max_residual = std::max(out.max_residual, res);
    if (!(res <= Real(tol.root_residual) * std::max<Real>(Real(1), evaluation_scale<Real>(cs, x))))
      throw NumericalFailure("psi root residual " + std::to_string(static_cast<double>(res)) + " above tolerance");
  }
  for (std::size_t i = 0; i < out.roots.size(); ++i)
    for (std::size_t k = i + 1; k < out.roots.size(); ++k)
      if (std::abs(out.roots[i] - out.roots[k]) <= Real(tol.theta_separation) * (Real(1) + std::abs(out.roots[i])))
        throw NumericalFailure("psi roots not separated");

  const BasicComplexCurve<Real> curve(to_complex<Real>(e.a()), to_complex<Real>(e.b()), Real(1e-7));
  auto point_over = [&](C x) { return BasicComplexPoint<Real>::affine(x, std::sqrt(curve.rhs(x))); };

  out.p = point_over(out.roots.front());
  if (flip_p) out.p = curve.negate(out.p);
  const C x2p = curve.doubled(out.p).x;
  Real best = -1;
  for (std::size_t k = 1; k < out.roots.size(); ++k) {
    const auto cand = point_over(out.roots[k]);
    const auto d = curve.doubled(cand);
    if (d.at_infinity) throw NumericalFailure("primitive 4-torsion point doubled to infinity");
    const Real sep = std::abs(d.x - x2p);
    if (sep > best) {
      best = sep;
      out.q = cand;
    }
  }
  if (!(best > Real(tol.theta_separation) * (Real(1) + std::abs(x2p))))
    throw NumericalFailure("could not separate 2P from 2Q");
  return out;
}

template <class Real>
std::vector<std::complex<Real>> theta_impl(const CurveQ& e, const Basis<Real>& basis,
                                           const std::vector<std::vector<glmod::Mat2>>& cosets, const NumericTolerances& tol,
                                           ActionConvention convention) {
  using C = std::complex<Real>;
  using Point = BasicComplexPoint<Real>;
  const BasicComplexCurve<Real> curve(to_complex<Real>(e.a()), to_complex<Real>(e.b()), Real(1e-7));

  std::array<Point, 4> mp, mq;
  mp[0] = mq[0] = Point::infinity();
  mp[1] = basis.p;
  mq[1] = basis.q;
  mp[2] = curve.doubled(basis.p);
  mq[2] = curve.doubled(basis.q);
  mp[3] = curve.negate(basis.p);
  mq[3] = curve.negate(basis.q);

  // x(iP + jQ) for every (i, j) with (i, j) != 0 mod 2; those are exactly
  // the order-4 points, so x is finite.
  std::array<std::array<C, 4>, 4> x_of{};
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      if (i % 2 == 0 && j % 2 == 0) continue;
      const Point s = curve.add(mp[i], mq[j]);
      if (s.at_infinity) throw NumericalFailure("basis combination collapsed to infinity");
      x_of[i][j] = s.x;
    }

  std::vector<C> theta;
  for (const auto& coset : cosets) {
    C sum = 0;
    for (const auto& g : coset) {
      if (g.exponent != 2) throw std::invalid_argument("cosets must be matrices mod 4");
      if (convention == ActionConvention::column)
        sum += x_of[g.e11][g.e21] * x_of[g.e12][g.e22];
      else
        sum += x_of[g.e11][g.e12] * x_of[g.e21][g.e22];
    }
    theta.push_back(sum);
  }
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (std::size_t k = i + 1; k < theta.size(); ++k)
      if (std::abs(theta[i] - theta[k]) <= Real(tol.theta_separation) * (Real(1) + std::abs(theta[i])))
        throw ThetaCollision("coset sums " + std::to_string(i) + " and " + std::to_string(k) + " coincide");
  return theta;
}

std::array<std::complex<double>, 5> expand_monic(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<long double>> c{1.0L};
  for (const auto& r : roots) {
    std::vector<std::complex<long double>> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * std::complex<long double>(r);
    }
    c = std::move(next);
  }
  std::array<std::complex<double>, 5> out{};
  for (std::size_t i = 0; i < out.size() && i < c.size(); ++i) out[i] = std::complex<double>(c[i]);
  return out;
}

template <class Real>
TorsionBasis to_public(const Basis<Real>& b) {
  auto pt = [](const BasicComplexPoint<Real>& p) {
    return ComplexPoint{p.at_infinity, std::complex<double>(p.x), std::complex<double>(p.y)};
  };
  TorsionBasis out{pt(b.p), pt(b.q), {}, static_cast<double>(b.max_residual)};
  for (const auto& r : b.roots) out.psi_roots.emplace_back(r);
  return out;
}

Basis<double> from_public(const TorsionBasis& b) { return Basis<double>{b.p, b.q, b.psi_roots, b.max_root_residual}; }

template <class Real>
ThetaData compute_theta_in(const CurveQ& e, const NumericTolerances& tol, bool flip_p, ActionConvention convention) {
  ThetaData out;
  const Basis<Real> basis = basis_impl<Real>(e, tol, flip_p);
  out.basis = to_public(basis);
  out.cosets = exceptional_cosets();
  for (const auto& t : theta_impl<Real>(e, basis, out.cosets, tol, convention)) out.theta.emplace_back(t);
  out.monic_quartic = expand_monic(out.theta);
  return out;
}

}  // namespace

TorsionBasis complex_4torsion_basis(const CurveQ& e, const NumericTolerances& tol, bool flip_p) {
  return to_public(basis_impl<double>(e, tol, flip_p));
}

ThetaData theta_sums(const CurveQ& e, const TorsionBasis& basis, const std::vector<std::vector<glmod::Mat2>>& cosets,
                     const NumericTolerances& tol, ActionConvention convention) {
  ThetaData out;
  out.basis = basis;
  out.cosets = cosets;
  out.theta = theta_impl<double>(e, from_public(basis), cosets, tol, convention);
  out.monic_quartic = expand_monic(out.theta);
  return out;
}

std::vector<std::vector<glmod::Mat2>> exceptional_cosets() {
  static const glmod::GroupTable gl4(2);
  const glmod::SubgroupSet h = glmod::exceptional_subgroup(gl4);
  std::vector<std::vector<glmod::Mat2>> out;
  for (const auto& coset : glmod::coset_partition(h)) {
    std::vector<glmod::Mat2> mats;
    for (glmod::Index i : coset) mats.push_back(gl4.element(i));
    out.push_back(std::move(mats));
  }
  return out;
}

ThetaData compute_theta(const CurveQ& e, const NumericTolerances& tol, bool flip_p, ActionConvention convention) {
  try {
    return compute_theta_in<double>(e, tol, flip_p, convention);
  } catch (const NumericalFailure&) {
    ThetaData out = compute_theta_in<long double>(e, tol, flip_p, convention);
    out.extended_precision = true;
    return out;
  }
}

std::vector<Rational> candidate_theta_scales() {
  return {Rational(1), make_rational(1, 4), Rational(4), Rational(8)};
}

NormalizationMatch resolvent_identity_check(const CurveQ& e, const NumericTolerances& tol) {
  if (e.b() == 0) throw std::invalid_argument("resolvent identity needs b != 0");
  NormalizationMatch out;
  out.data = compute_theta(e, tol);
  const RatPolynomial f = f_resolvent(e);

  // The x^k coefficient of a monic quartic is an elementary symmetric
  // function of degree 4-k; judge it against R^(4-k), R = max |theta|.
  double radius = 0;
  for (const auto& t : out.data.theta) radius = std::max(radius, std::abs(t));

  std::vector<std::pair<Rational, double>> matches;
  for (const Rational& s : candidate_theta_scales()) {
    // Coefficient of x^k in s^4 f(x/s) is s^(4-k) f_k.
    double worst = 0;
    Rational power = 1;
    for (int k = 4; k >= 0; --k) {
      const double expected = Rational(power * f.coeff(static_cast<std::size_t>(k))).get_d();
      const double magnitude = std::pow(radius, 4 - k);
      const double dev = std::abs(out.data.monic_quartic[static_cast<std::size_t>(k)] - expected) / (1.0 + magnitude);
      worst = std::max(worst, dev);
      power *= s;
    }
    out.candidates.emplace_back(s, worst);
    if (worst < tol.coefficient_match) matches.emplace_back(s, worst);
  }
  if (matches.size() != 1)
    throw NoNormalizationMatches(std::to_string(matches.size()) + " candidate normalizations match for a = " +
                                 to_string(e.a()) + ", b = " + to_string(e.b()));
  out.scale = matches.front().first;
  out.max_coeff_deviation = matches.front().second;
  return out;
}

}  // namespace twoadic
