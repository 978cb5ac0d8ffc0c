#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace twoadic {

/// All complex roots of sum c_i x^i (c low-to-high, leading coefficient
/// nonzero) by Aberth-Ehrlich simultaneous iteration from a randomly
/// perturbed circle, followed by Newton polishing. Deterministic for a given
/// seed. Instantiated for double and long double.
template <class Real>
std::vector<std::complex<Real>> polynomial_roots(std::span<const std::complex<Real>> coeffs, std::uint64_t seed = 0x5eed);

/// |p(z)| by Horner.
template <class Real>
Real residual(std::span<const std::complex<Real>> coeffs, std::complex<Real> z);

/// sum |c_i| |z|^i, the natural scale for judging a residual.
template <class Real>
Real evaluation_scale(std::span<const std::complex<Real>> coeffs, std::complex<Real> z);

}  // namespace twoadic
