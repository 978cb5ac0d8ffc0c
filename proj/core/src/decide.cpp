#include "twoadic/decide.hpp"

#include "twoadic/polynomial.hpp"

namespace twoadic {

namespace {

void add_square_class(const CurveQ& e, int c, std::vector<Obstruction>& out) {
  if (auto r = square_class_witness(e.discriminant(), c)) out.emplace_back(DiscriminantInClass{c, *r});
}

void finish(SurjectivityReport& report) { report.surjective = report.obstructions.empty(); }

SurjectivityReport level4_given(const CurveQ& e, const SurjectivityReport& mod2) {
  SurjectivityReport report{4, true, {}};
  if (!mod2.surjective) report.obstructions.emplace_back(InheritedFailure{2});
  add_square_class(e, -1, report.obstructions);
  if (auto t = family_parameter(e.j_invariant())) report.obstructions.emplace_back(JInFamily{*t});
  finish(report);
  return report;
}

SurjectivityReport level8_given(const CurveQ& e, const SurjectivityReport& mod4) {
  SurjectivityReport report{8, true, {}};
  if (!mod4.surjective) report.obstructions.emplace_back(InheritedFailure{4});
  add_square_class(e, 2, report.obstructions);
  add_square_class(e, -2, report.obstructions);
  finish(report);
  return report;
}

}  // namespace

std::optional<Rational> family_parameter(const Rational& j) {
  const Integer& p = j.get_num();
  const Integer& q = j.get_den();
  const IntPolynomial quartic{p, Integer(0), Integer(0), Integer(32 * q), Integer(4 * q)};
  const auto roots = rational_roots(quartic);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

SurjectivityReport mod2_surjective(const CurveQ& e) {
  SurjectivityReport report{2, true, {}};
  // A cubic is reducible over Q exactly when it has a rational root.
  const auto roots = rational_roots(clear_denominators(e.two_torsion_cubic()));
  if (!roots.empty()) report.obstructions.emplace_back(CubicRationalRoot{roots.front()});
  add_square_class(e, 1, report.obstructions);
  finish(report);
  return report;
}

SurjectivityReport mod4_surjective(const CurveQ& e) { return level4_given(e, mod2_surjective(e)); }

SurjectivityReport mod8_surjective(const CurveQ& e) { return level8_given(e, mod4_surjective(e)); }

Analysis analyze(const CurveQ& e) {
  Analysis out;
  out.mod2 = mod2_surjective(e);
  out.mod4 = level4_given(e, out.mod2);
  out.mod8 = level8_given(e, out.mod4);
  out.two_adic_surjective = out.mod8.surjective;
  return out;
}

bool verify_obstruction(const CurveQ& e, const Obstruction& o) {
  struct Visitor {
    const CurveQ& e;
    bool operator()(const CubicRationalRoot& w) const { return e.two_torsion_cubic().evaluate(w.x0) == 0; }
    bool operator()(const DiscriminantInClass& w) const {
      if (w.c != 1 && w.c != -1 && w.c != 2 && w.c != -2) return false;
      return w.r > 0 && w.c * w.r * w.r == e.discriminant();
    }
    bool operator()(const JInFamily& w) const { return family_j(w.t) == e.j_invariant(); }
    bool operator()(const InheritedFailure& w) const {
      if (w.level == 2) return !mod2_surjective(e).surjective;
      if (w.level == 4) return !mod4_surjective(e).surjective;
      return false;
    }
  };
  return std::visit(Visitor{e}, o);
}

}  // namespace twoadic
