#pragma once

// Exact integer/rational arithmetic and the number-theoretic primitives the
// surjectivity tests are built from. Integer and Rational are GMP values;
// everything here is a pure function.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twoadic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "-p", "p/q" (decimal integers, optional leading sign).
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// floor(sqrt(n)); throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

/// The nonnegative rational r with r*r == q, if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// True iff q lies in c * (Q^x)^2. c must be one of 1, -1, 2, -2 and q != 0.
bool in_square_class(const Rational& q, int c);

/// The r > 0 with q == c * r^2 when q is in the square class of c.
std::optional<Rational> square_class_witness(const Rational& q, int c);

/// Miller-Rabin. Deterministic for n < 2^64 (first twelve prime bases), and
/// 40 seeded random rounds above that.
bool is_probable_prime(const Integer& n);

/// Prime factorization of |n| as (prime, exponent), primes ascending.
/// Trial division to 10^6, then Pollard rho (Brent) with a fixed seed.
/// Throws std::domain_error for n == 0.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// All positive divisors of |n| in ascending order. Throws for n == 0.
std::vector<Integer> divisors(const Integer& n);

}  // namespace twoadic
