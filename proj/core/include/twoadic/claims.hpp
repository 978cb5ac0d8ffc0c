#pragma once

// Reproducible verifications of the group-theoretic and resolvent facts the
// surjectivity criteria depend on. Each returns a ClaimReport instead of
// throwing; a failed report carries a counterexample description.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twoadic {

struct SurvivorSummary {
  std::size_t order = 0;
  std::size_t class_size = 0;     // conjugates among the survivors
  std::string representative;     // generators of one member
};

struct ClaimReport {
  std::string id;
  std::string statement;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<SurvivorSummary> survivors;
  std::optional<std::string> counterexample;
  double wall_seconds = 0;

  void add(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  [[nodiscard]] std::optional<std::string> fact(std::string_view key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return v;
    return std::nullopt;
  }
};

/// Subgroups of GL_2(Z/4) onto GL_2(Z/2) with full det and a C_2 x C_2
/// quotient: the full group and one conjugacy class of order-24 subgroups,
/// conjugate to <(0 1; 3 0), (0 1; 1 1)> and isomorphic to C_3 x| D_8.
ClaimReport verify_mod4_claim(unsigned workers = 1);

/// Subgroups of GL_2(Z/8) onto GL_2(Z/4) with full det and a C_2^3 quotient:
/// only the full group.
ClaimReport verify_mod8_claim(unsigned workers = 1);

/// (mod 2, det) maps GL_2(Z/4) onto S_3 x (Z/4)^x and GL_2(Z/8) onto
/// S_3 x (Z/8)^x; SL_2 still maps onto S_3.
ClaimReport verify_det_mod2_surjectivity();

/// No proper subgroup of GL_2(Z/16) maps onto GL_2(Z/8).
ClaimReport verify_mod16_lift(unsigned workers = 1);

/// prod (x - theta_C) matches one fixed normalization of f on `samples`
/// seeded random integer curves with |a|, |b| <= 20, b != 0.
ClaimReport verify_resolvent_identity(std::size_t samples = 25, std::uint64_t seed = 7);

/// disc(f) == 3^6 b^2 delta^3 and f(a) == -3a delta/4 on seeded random
/// rational curves, plus the (0, 1) instance.
ClaimReport verify_disc_identity(std::size_t samples = 100, std::uint64_t seed = 7);

/// f has a rational root iff j = -4t^3(t+8) has a rational solution, with
/// witness chains, on seeded random curves (a, b != 0), plus the a = 0 case.
ClaimReport verify_lemma(std::size_t samples = 200, std::uint64_t seed = 7);

}  // namespace twoadic
