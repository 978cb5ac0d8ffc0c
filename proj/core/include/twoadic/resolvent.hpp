#pragma once

// The resolvent quartic attached to the 4-torsion of y^2 = x^3 + ax + b.
//
// psi(x) = x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - (a^3 + 8b^2) has the
// x-coordinates of the twelve points of exact order 4 as its roots. For a
// basis (P, Q) of E[4] and each left coset C of the exceptional subgroup H
// in GL_2(Z/4) the coset sum
//
//     theta_C = sum_{g in C} x(gP) x(gQ)
//
// is permuted by Galois exactly as GL_2(Z/4) permutes the cosets, so the
// quartic with roots theta_C has rational coefficients. Numerically that
// quartic is 8^4 f(x / 8) with
//
//     f(x) = x^4 - 4ax^3 + 6a^2x^2 + 4(7a^3 + 54b^2)x + (17a^4 + 108ab^2),
//
// i.e. theta_C = 8 r_C for the roots r_C of f. The image of Galois lies in a
// conjugate of H iff f has a rational root iff j = -4t^3(t+8) for some
// rational t.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "twoadic/curve.hpp"
#include "twoadic/glmod.hpp"

namespace twoadic {

// ---------------------------------------------------------------- exact side

/// x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - (a^3 + 8b^2).
RatPolynomial psi4_primitive(const CurveQ& e);

/// x^4 - 4a x^3 + 6a^2 x^2 + 4(7a^3 + 54b^2) x + (17a^4 + 108ab^2).
RatPolynomial f_resolvent(const CurveQ& e);

/// disc(f) == 3^6 b^2 delta^3, by an exact resultant. Throws SingularCurve.
bool disc_identity_check(const Rational& a, const Rational& b);

/// f(a) == -3 a delta / 4, so r = a is never a root of f and u = r/a != 1.
/// Requires a != 0.
bool guard_identity_check(const Rational& a, const Rational& b);

/// -27648 (2u + 1) / (u - 1)^4. Throws std::invalid_argument at u = 1.
Rational u_to_j(const Rational& u);

/// r -> u = r/a -> t = 12/(u - 1) for a rational root r of f.
struct LemmaWitness {
  Rational r, u, t;
};

struct LemmaCheck {
  bool f_has_rational_root = false;
  bool j_in_family = false;
  std::optional<LemmaWitness> witness;
  /// j == u_to_j(u) == -4t^3(t+8) for the witness, when there is one.
  bool forward_chain_verified = true;
  /// For the first family parameter t, r = a (12/t + 1) is a root of f.
  bool reverse_chain_verified = true;

  [[nodiscard]] bool holds() const {
    return f_has_rational_root == j_in_family && forward_chain_verified && reverse_chain_verified;
  }
};

/// Requires a != 0 and b != 0 (std::invalid_argument otherwise).
LemmaCheck lemma_equivalence_check(const CurveQ& e);

// -------------------------------------------------------------- numeric side

struct NumericTolerances {
  double root_residual = 1e-9;     // relative to evaluation_scale
  double theta_separation = 1e-6;  // |theta_i - theta_j| > sep * (1 + |theta_i|)
  double coefficient_match = 1e-6; // coefficient of x^k, relative to 1 + max|theta|^(4-k)
};

/// Affine point or the point at infinity over C.
template <class Real>
struct BasicComplexPoint {
  bool at_infinity = true;
  std::complex<Real> x{}, y{};

  static BasicComplexPoint infinity() { return {}; }
  static BasicComplexPoint affine(std::complex<Real> x, std::complex<Real> y) { return {false, x, y}; }
};
using ComplexPoint = BasicComplexPoint<double>;

/// Chord-and-tangent law on y^2 = x^3 + ax + b over C. Coincidence of
/// x-coordinates and vanishing of y are judged against `tol` relative to the
/// size of the coordinates.
template <class Real>
class BasicComplexCurve {
 public:
  using C = std::complex<Real>;
  using Point = BasicComplexPoint<Real>;

  BasicComplexCurve(C a, C b, Real tol) : a_(a), b_(b), tol_(tol) {}
  explicit BasicComplexCurve(const CurveQ& e, Real tol = Real(1e-7))
      : BasicComplexCurve(C(Real(e.a().get_d())), C(Real(e.b().get_d())), tol) {}

  [[nodiscard]] C rhs(C x) const { return (x * x + a_) * x + b_; }
  [[nodiscard]] Real on_curve_residual(const Point& p) const {
    return p.at_infinity ? Real(0) : std::abs(p.y * p.y - rhs(p.x));
  }
  [[nodiscard]] Point negate(const Point& p) const { return p.at_infinity ? p : Point::affine(p.x, -p.y); }

  [[nodiscard]] Point doubled(const Point& p) const {
    if (p.at_infinity || std::abs(p.y) <= tol_ * scale(p.x)) return Point::infinity();
    const C slope = (C(3) * p.x * p.x + a_) / (C(2) * p.y);
    const C x3 = slope * slope - C(2) * p.x;
    return Point::affine(x3, slope * (p.x - x3) - p.y);
  }

  [[nodiscard]] Point add(const Point& p, const Point& q) const {
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    if (std::abs(p.x - q.x) <= tol_ * (Real(1) + std::abs(p.x) + std::abs(q.x))) {
      if (std::abs(p.y + q.y) <= tol_ * scale(p.x)) return Point::infinity();
      return doubled(p);
    }
    const C slope = (q.y - p.y) / (q.x - p.x);
    const C x3 = slope * slope - p.x - q.x;
    return Point::affine(x3, slope * (p.x - x3) - p.y);
  }

  /// k * p for k >= 0 by repeated addition (k is tiny here).
  [[nodiscard]] Point multiple(unsigned k, const Point& p) const {
    Point r = Point::infinity();
    for (unsigned i = 0; i < k; ++i) r = add(r, p);
    return r;
  }

 private:
  [[nodiscard]] Real scale(C x) const { return Real(1) + std::pow(std::abs(x), Real(1.5)) + std::sqrt(std::abs(a_) * std::abs(x)) + std::sqrt(std::abs(b_)); }

  C a_, b_;
  Real tol_;
};
using ComplexCurve = BasicComplexCurve<double>;

struct TorsionBasis {
  ComplexPoint p, q;
  std::vector<std::complex<double>> psi_roots;
  double max_root_residual = 0;  // absolute |psi(x)| over all roots
};

/// P is the point over the first root of psi with the principal square root
/// for y; Q is taken over the root whose double is farthest from 2P, so 2P
/// and 2Q are distinct 2-torsion points and (P, Q) is a basis of E[4].
/// `flip_p` replaces P by -P. Throws NumericalFailure.
TorsionBasis complex_4torsion_basis(const CurveQ& e, const NumericTolerances& tol = {}, bool flip_p = false);

/// Where g = (al be; ga de) sends the basis.
enum class ActionConvention {
  column,     // gP = al P + ga Q,  gQ = be P + de Q
  transpose,  // gP = al P + be Q,  gQ = ga P + de Q
};
inline constexpr ActionConvention kActionConvention = ActionConvention::column;

/// theta_C = 8 * (root of f) under kActionConvention.
inline const Rational kThetaNormalization{8};

struct ThetaData {
  TorsionBasis basis;
  std::vector<std::vector<glmod::Mat2>> cosets;
  std::vector<std::complex<double>> theta;
  /// prod (x - theta_C), low-to-high, 5 coefficients.
  std::array<std::complex<double>, 5> monic_quartic{};
  /// True if the long double fallback produced these values.
  bool extended_precision = false;
};

/// Coset sums for the given basis and partition of GL_2(Z/4). Throws
/// ThetaCollision when two sums are not separated.
ThetaData theta_sums(const CurveQ& e, const TorsionBasis& basis, const std::vector<std::vector<glmod::Mat2>>& cosets,
                     const NumericTolerances& tol = {}, ActionConvention convention = kActionConvention);

/// Left cosets of the exceptional subgroup in GL_2(Z/4), as matrices.
std::vector<std::vector<glmod::Mat2>> exceptional_cosets();

/// Basis, cosets and theta sums in one go; retries the whole computation in
/// long double when double precision fails.
ThetaData compute_theta(const CurveQ& e, const NumericTolerances& tol = {}, bool flip_p = false,
                        ActionConvention convention = kActionConvention);

/// Result of comparing prod (x - theta_C) with s^4 f(x / s), i.e. theta = s * root.
struct NormalizationMatch {
  Rational scale;
  double max_coeff_deviation = 0;
  /// Deviation for every candidate scale, in candidate order.
  std::vector<std::pair<Rational, double>> candidates;
  ThetaData data;
};

/// Candidate scales: 1 (f itself), 1/4 (f(4x)/256), 4 (half the coset sum)
/// and 8 (the full coset sum).
std::vector<Rational> candidate_theta_scales();

/// Requires b != 0. Throws NoNormalizationMatches unless exactly one
/// candidate matches within tol.coefficient_match.
NormalizationMatch resolvent_identity_check(const CurveQ& e, const NumericTolerances& tol = {});

}  // namespace twoadic
