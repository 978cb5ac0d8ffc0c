#include <doctest.h>

#include <random>

#include "twoadic/decide.hpp"

using namespace twoadic;

namespace {

std::vector<CurveQ> random_curves(std::size_t count, std::uint64_t seed, long bound = 50) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<CurveQ> out;
  while (out.size() < count) {
    const Rational a(dist(rng)), b(dist(rng));
    if (4 * a * a * a + 27 * b * b == 0) continue;
    out.emplace_back(a, b);
  }
  return out;
}

std::tuple<bool, bool, bool> verdicts(const Analysis& r) { return {r.mod2.surjective, r.mod4.surjective, r.mod8.surjective}; }

}  // namespace

TEST_CASE("pinned curves") {
  CHECK(verdicts(analyze(CurveQ(Rational(0), Rational(-2)))) == std::tuple{true, false, false});
  CHECK(verdicts(analyze(CurveQ(Rational(6), Rational(8)))) == std::tuple{true, true, false});
  CHECK(verdicts(analyze(CurveQ(Rational(1), Rational(1)))) == std::tuple{true, true, true});

  const auto e68 = mod8_surjective(CurveQ(Rational(6), Rational(8)));
  REQUIRE(e68.obstructions.size() == 1);
  CHECK(std::get<DiscriminantInClass>(e68.obstructions[0]) == DiscriminantInClass{-2, Rational(144)});
}

TEST_CASE("j = 0 is witnessed by t = 0") {
  const auto r = mod4_surjective(CurveQ(Rational(0), Rational(-2)));
  CHECK_FALSE(r.surjective);
  bool found = false;
  for (const auto& o : r.obstructions)
    if (const auto* w = std::get_if<JInFamily>(&o)) {
      CHECK(w->t == 0);
      found = true;
    }
  CHECK(found);
  CHECK(family_parameter(Rational(0)) == Rational(0));
}

TEST_CASE("a rational 2-torsion point is reported at mod 2") {
  const auto r = mod2_surjective(CurveQ(Rational(-1), Rational(0)));
  CHECK_FALSE(r.surjective);
  REQUIRE_FALSE(r.obstructions.empty());
  CHECK(std::get<CubicRationalRoot>(r.obstructions[0]).x0 == 0);
}

TEST_CASE("square discriminant is reported at mod 2") {
  // x^3 - 7x + 7 is irreducible with discriminant 49 (cyclic cubic).
  const CurveQ e(Rational(-7), Rational(7));
  const auto r = mod2_surjective(e);
  CHECK_FALSE(r.surjective);
  REQUIRE(r.obstructions.size() == 1);
  CHECK(std::get<DiscriminantInClass>(r.obstructions[0]).c == 1);
}

TEST_CASE("monotonicity and certificate soundness on random curves") {
  for (const auto& e : random_curves(300, 31)) {
    const Analysis r = analyze(e);
    if (r.mod8.surjective) CHECK(r.mod4.surjective);
    if (r.mod4.surjective) CHECK(r.mod2.surjective);
    CHECK(r.two_adic_surjective == r.mod8.surjective);
    for (const auto* rep : {&r.mod2, &r.mod4, &r.mod8}) {
      CHECK(rep->surjective == rep->obstructions.empty());
      for (const auto& o : rep->obstructions) CHECK(verify_obstruction(e, o));
    }
  }
}

TEST_CASE("verdicts are invariant under rescaling a -> s^4 a, b -> s^6 b") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> sd(1, 9);
  for (const auto& e : random_curves(100, 33)) {
    const Rational s = make_rational(sd(rng), sd(rng));
    const Rational s2 = s * s;
    const CurveQ scaled(e.a() * s2 * s2, e.b() * s2 * s2 * s2);
    CHECK(verdicts(analyze(scaled)) == verdicts(analyze(e)));
  }
}

TEST_CASE("mod 2 and j-family verdicts are twist invariant, mod 8 may change") {
  for (const auto& e : random_curves(100, 34)) {
    const CurveQ t = quadratic_twist(e, Rational(-1));
    CHECK(mod2_surjective(t).surjective == mod2_surjective(e).surjective);
    CHECK(family_parameter(t.j_invariant()).has_value() == family_parameter(e.j_invariant()).has_value());
  }
}

TEST_CASE("tampered certificates are rejected") {
  const CurveQ e(Rational(6), Rational(8));
  CHECK_FALSE(verify_obstruction(e, DiscriminantInClass{-2, Rational(145)}));
  CHECK_FALSE(verify_obstruction(e, DiscriminantInClass{2, Rational(144)}));
  CHECK_FALSE(verify_obstruction(e, CubicRationalRoot{Rational(1)}));
  CHECK_FALSE(verify_obstruction(e, JInFamily{Rational(1)}));
  CHECK_FALSE(verify_obstruction(e, InheritedFailure{2}));
}

TEST_CASE("family curves fail mod 4 with a j-family certificate") {
  for (long n = -20; n <= 20; n += 3) {
    const Rational t = make_rational(n, 3);
    if (t == -8) continue;
    const auto r = mod4_surjective(family_curve(t));
    CHECK_FALSE(r.surjective);
    bool has_family = false;
    for (const auto& o : r.obstructions) has_family |= std::holds_alternative<JInFamily>(o);
    CHECK(has_family);
  }
}
