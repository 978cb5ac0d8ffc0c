#include "twoadic/exactnum.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <stdexcept>

#include "twoadic/errors.hpp"

namespace twoadic {

namespace {

constexpr unsigned long kTrialBound = 1'000'000;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  Integer n(std::string(s), 10);
  return negative ? Integer(-n) : n;
}

Integer powmod(const Integer& base, const Integer& exp, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& a) {
  Integer x = powmod(a, d, n);
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n; retries with a new polynomial constant until one is found.
Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  for (;;) {
    Integer y = Integer(static_cast<unsigned long>(rng() % 1'000'000'007UL)) % n;
    const Integer c = Integer(static_cast<unsigned long>(rng() % 1'000'000'006UL + 1)) % n;
    const unsigned long m = 128;
    Integer g = 1, q = 1, x, ys;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  const Integer d = pollard_brent(n, rng);
  factor_into(d, primes, rng);
  factor_into(Integer(n / d), primes, rng);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  // Lowest terms: q is a square iff numerator and denominator both are.
  const Integer rn = isqrt(q.get_num());
  if (rn * rn != q.get_num()) return std::nullopt;
  const Integer rd = isqrt(q.get_den());
  if (rd * rd != q.get_den()) return std::nullopt;
  return make_rational(rn, rd);
}

namespace {
void check_class(const Rational& q, int c) {
  if (q == 0) throw std::domain_error("square class of zero");
  if (c != 1 && c != -1 && c != 2 && c != -2) throw std::invalid_argument("square class must be one of 1, -1, 2, -2");
}
}  // namespace

bool in_square_class(const Rational& q, int c) {
  check_class(q, c);
  return rational_sqrt(Rational(q * c)).has_value();
}

std::optional<Rational> square_class_witness(const Rational& q, int c) {
  check_class(q, c);
  return rational_sqrt(Rational(q / c));
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned a : kBases) {
    if (!miller_rabin_round(n, d, s, Integer(a))) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x2ad1cUL);
  const Integer span = n - 3;
  for (int round = 0; round < 40; ++round) {
    const Integer a = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n == 0) throw std::domain_error("factorization of zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    std::mt19937_64 rng(0x5eedUL);
    factor_into(m, primes, rng);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.emplace_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace twoadic
