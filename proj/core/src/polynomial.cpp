#include "twoadic/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace twoadic {

namespace {

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// p(num/den) * den^deg, exact in the integers.
Integer homogeneous_value(const IntPolynomial& p, const Integer& num, const Integer& den) {
  Integer acc = 0;
  Integer den_pow = 1;
  // Horner on the homogenized form: sum c_i num^i den^(n-i).
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc;
}

template <class Coeff>
std::string render(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Coeff c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x / g);
  return IntPolynomial(std::move(c));
}

IntPolynomial clear_denominators(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x.get_num() * (l / x.get_den()));
  return primitive_part(IntPolynomial(std::move(c)));
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;

  std::size_t shift = 0;
  while (p.coeffs()[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  const IntPolynomial q = primitive_part(
      IntPolynomial(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end())));
  if (q.degree() >= 1) {
    const auto nums = divisors(q.coeff(0));
    const auto dens = divisors(q.leading());
    for (const auto& d : dens) {
      for (const auto& n : nums) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1) continue;
        for (const Integer& signed_num : {n, Integer(-n)}) {
          if (homogeneous_value(q, signed_num, d) == 0) roots.push_back(make_rational(signed_num, d));
        }
      }
    }
  }
  // Candidates are pairwise distinct (lowest terms, nonzero after stripping).
  return roots;
}

Rational resultant(const RatPolynomial& p, const RatPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 || n == 0) {
    Rational r = 1;
    if (m == 0)
      for (int i = 0; i < n; ++i) r *= p.leading();
    else
      for (int i = 0; i < m; ++i) r *= q.leading();
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size), 0));
  // Rows 0..n-1: shifted copies of p; rows n..n+m-1: shifted copies of q.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = p.coeff(static_cast<std::size_t>(m - i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = q.coeff(static_cast<std::size_t>(n - i));

  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && s[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      const Rational factor = s[r][col] / s[col][col];
      for (int c = col; c < size; ++c) s[r][c] -= factor * s[col][c];
    }
  }
  return det;
}

Rational discriminant(const RatPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  Rational d = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

std::string to_string(const IntPolynomial& p) { return render(p); }
std::string to_string(const RatPolynomial& p) { return render(p); }

}  // namespace twoadic
