#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twoadic/exactnum.hpp"

namespace twoadic {

/// Dense univariate polynomial, coefficients stored low-to-high.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  [[nodiscard]] const Coeff& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation in the value's own ring (Integer coefficients at a
  /// Rational point, Rational coefficients at a Rational point, ...).
  template <class Value>
  [[nodiscard]] Value evaluate(const Value& x) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Value(*it);
    }
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Coeff> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r[i] += q.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Coeff> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r[i] -= q.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Coeff> r(p.coeffs_.size() + q.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
    std::vector<Coeff> r(p.coeffs_);
    for (auto& x : r) x *= c;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Promotes integer coefficients to rationals.
RatPolynomial to_rational(const IntPolynomial& p);

/// The primitive integer polynomial proportional to p with positive leading
/// coefficient (multiply by the lcm of denominators, divide by the content).
IntPolynomial clear_denominators(const RatPolynomial& p);

/// Divides out the content; keeps the sign of the leading coefficient positive.
IntPolynomial primitive_part(const IntPolynomial& p);

/// The exact set of rational roots in candidate order: 0 first (if x divides
/// p), then +n/d, -n/d for d, n ascending over the divisors of the leading
/// and constant coefficients. Every candidate is checked by exact
/// evaluation. Throws std::domain_error for the zero polynomial.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/// Resultant via the Sylvester determinant, computed by exact elimination.
Rational resultant(const RatPolynomial& p, const RatPolynomial& q);

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), n = deg p >= 1.
Rational discriminant(const RatPolynomial& p);

/// Human-readable rendering, highest degree first, e.g. "x^4 + 216*x".
std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);

}  // namespace twoadic
