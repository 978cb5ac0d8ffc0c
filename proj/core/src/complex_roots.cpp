#include "twoadic/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace twoadic {

namespace {

template <class Real>
void horner(std::span<const std::complex<Real>> c, std::complex<Real> z, std::complex<Real>& p, std::complex<Real>& dp) {
  p = c.back();
  dp = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

template <class Real>
Real residual(std::span<const std::complex<Real>> coeffs, std::complex<Real> z) {
  std::complex<Real> p = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) p = p * z + coeffs[i];
  return std::abs(p);
}

template <class Real>
Real evaluation_scale(std::span<const std::complex<Real>> coeffs, std::complex<Real> z) {
  const Real r = std::abs(z);
  Real s = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) s = s * r + std::abs(coeffs[i]);
  return s;
}

template <class Real>
std::vector<std::complex<Real>> polynomial_roots(std::span<const std::complex<Real>> coeffs, std::uint64_t seed) {
  using C = std::complex<Real>;
  if (coeffs.size() < 2 || coeffs.back() == C(0)) throw std::invalid_argument("polynomial_roots needs degree >= 1");
  const std::size_t n = coeffs.size() - 1;

  std::vector<C> monic(coeffs.begin(), coeffs.end());
  for (auto& c : monic) c /= coeffs.back();
  const std::span<const C> p(monic);

  // Cauchy bound on root moduli.
  Real bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(monic[i]));
  const Real radius = std::min<Real>(Real(1) + bound, Real(2) * std::pow(std::max<Real>(bound, Real(1e-3)), Real(1) / Real(n)) + Real(0.5));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<C> z(n);
  const Real offset = Real(0.4);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(k) / Real(n) + offset + Real(jitter(rng));
    z[k] = std::polar(radius * (Real(1) + Real(jitter(rng))), angle);
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int iter = 0; iter < 1000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      C val, der;
      horner(p, z[k], val, der);
      if (val == C(0)) continue;
      const C ratio = val / der;
      C sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += C(1) / (z[k] - z[j]);
      const C step = ratio / (C(1) - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (Real(1) + std::abs(z[k])));
    }
    if (worst < Real(4) * eps) break;
  }

  // Newton polishing against the original coefficients; keep a step only
  // when it lowers the residual.
  for (auto& root : z) {
    for (int i = 0; i < 4; ++i) {
      C val, der;
      horner(coeffs, root, val, der);
      if (der == C(0)) break;
      const C next = root - val / der;
      if (residual(coeffs, next) >= std::abs(val)) break;
      root = next;
    }
  }
  std::sort(z.begin(), z.end(), [](const C& l, const C& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return z;
}

template std::vector<std::complex<double>> polynomial_roots<double>(std::span<const std::complex<double>>, std::uint64_t);
template std::vector<std::complex<long double>> polynomial_roots<long double>(std::span<const std::complex<long double>>,
                                                                              std::uint64_t);
template double residual<double>(std::span<const std::complex<double>>, std::complex<double>);
template long double residual<long double>(std::span<const std::complex<long double>>, std::complex<long double>);
template double evaluation_scale<double>(std::span<const std::complex<double>>, std::complex<double>);
template long double evaluation_scale<long double>(std::span<const std::complex<long double>>, std::complex<long double>);

}  // namespace twoadic
