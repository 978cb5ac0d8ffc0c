#include <doctest.h>

#include <random>

#include "oracles/brute_number_theory.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/exactnum.hpp"
#include "twoadic/polynomial.hpp"

using namespace twoadic;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-12/8") == Rational(-3, 2));
  CHECK(parse_rational("0/5") == Rational(0));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), ParseError);
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1 2", "--1"}) CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("isqrt brackets its argument") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Integer n(static_cast<unsigned long>(rng() >> (rng() % 60)));
    n *= n + 13;
    const Integer r = isqrt(n);
    CHECK(r * r <= n);
    CHECK(n < (r + 1) * (r + 1));
  }
  CHECK(isqrt(Integer(0)) == 0);
  CHECK_THROWS(isqrt(Integer(-1)));
}

TEST_CASE("square classes of nonzero rationals are disjoint") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> dist(-500, 500);
  for (int i = 0; i < 500; ++i) {
    long num = dist(rng), den = dist(rng);
    if (num == 0 || den == 0) continue;
    const Rational q = make_rational(num, den);
    int hits = 0;
    for (int c : {1, -1, 2, -2}) {
      if (!in_square_class(q, c)) continue;
      ++hits;
      const auto r = square_class_witness(q, c);
      REQUIRE(r);
      CHECK(*r > 0);
      CHECK(Rational(c) * *r * *r == q);
    }
    CHECK(hits <= 1);
    CHECK(in_square_class(q * q * 2, 2));
    CHECK_FALSE(in_square_class(q * q * 2, -2));
  }
  CHECK_THROWS(in_square_class(Rational(0), 1));
  CHECK_THROWS(in_square_class(Rational(5), 3));
}

TEST_CASE("rational_sqrt") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)));
  CHECK_FALSE(rational_sqrt(Rational(-4)));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("primality and factorization against trial division") {
  for (long n = 2; n < 3000; ++n) CHECK(is_probable_prime(Integer(n)) == oracle::is_prime_trial(n));
  CHECK(is_probable_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_probable_prime(Integer("3825123056546413051")));  // strong pseudoprime to bases 2..23
  const Integer big = Integer("1000000007") * Integer("998244353") * 4;
  const auto f = factorize(big);
  Integer back = 1;
  for (const auto& [p, e] : f) {
    CHECK(is_probable_prime(p));
    for (unsigned k = 0; k < e; ++k) back *= p;
  }
  CHECK(back == big);
}

TEST_CASE("divisors match brute force") {
  for (long n = 1; n <= 2000; n += 7) {
    const auto got = divisors(Integer(n));
    const auto want = oracle::divisors_brute(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
  CHECK(divisors(Integer(-12)).size() == 6);
}

TEST_CASE("rational_roots agrees with exhaustive candidate evaluation") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-60, 60);
  std::uniform_int_distribution<long> small(-6, 6);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p({Integer(coef(rng)), Integer(1)});
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      long den = 0;
      while (den == 0) den = small(rng);
      // Plant a rational root half the time, otherwise a random linear factor.
      if (trial % 2 == 0) p = p * IntPolynomial({Integer(-small(rng)), Integer(den)});
      else p = p * IntPolynomial({Integer(coef(rng)), Integer(coef(rng) | 1)});
    }
    if (p.degree() < 1) continue;
    auto got = rational_roots(p);
    auto want = oracle::rational_roots_brute(p);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
}

TEST_CASE("rational_roots candidate order puts 0 first") {
  // x (x + 8), the cleared family quartic at j = 0 up to a power of x.
  const IntPolynomial p({Integer(0), Integer(0), Integer(0), Integer(32), Integer(4)});
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == 0);
  CHECK(roots[1] == -8);
}

TEST_CASE("resultant and discriminant") {
  const RatPolynomial quad({Rational(-2), Rational(0), Rational(1)});
  CHECK(discriminant(quad) == 8);
  const RatPolynomial cubic({Rational(1), Rational(1), Rational(0), Rational(1)});
  CHECK(discriminant(cubic) == -31);  // -4*1 - 27*1
  const RatPolynomial q4({Rational(0), Rational(216), Rational(0), Rational(0), Rational(1)});
  CHECK(discriminant(q4) == Rational(-27) * 216 * 216 * 216 * 216);
  const RatPolynomial x_minus_1({Rational(-1), Rational(1)}), x_minus_2({Rational(-2), Rational(1)});
  CHECK(resultant(x_minus_1, x_minus_2) == -1);
}
