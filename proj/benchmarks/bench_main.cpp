#include <benchmark/benchmark.h>

#include <random>

#include "twoadic/decide.hpp"
#include "twoadic/glmod.hpp"
#include "twoadic/resolvent.hpp"

using namespace twoadic;

static void BM_Closure(benchmark::State& state) {
  const glmod::GroupTable g(static_cast<unsigned>(state.range(0)));
  const auto gens = glmod::find_generating_set(g);
  for (auto _ : state) benchmark::DoNotOptimize(glmod::closure(g, gens).order());
}
BENCHMARK(BM_Closure)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_Supplements(benchmark::State& state) {
  const glmod::GroupTable g(3), below(2);
  const auto gens = glmod::find_generating_set(below);
  for (auto _ : state) benchmark::DoNotOptimize(glmod::supplements(g, below, gens).size());
}
BENCHMARK(BM_Supplements)->Unit(benchmark::kMillisecond);

static void BM_RationalRoots(benchmark::State& state) {
  // 4Q t^4 + 32Q t^3 + P for a j with a moderately composite numerator.
  const IntPolynomial p({Integer("-123456789012"), Integer(0), Integer(0), Integer(32 * 4913), Integer(4 * 4913)});
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p).size());
}
BENCHMARK(BM_RationalRoots)->Unit(benchmark::kMicrosecond);

static void BM_Theta(benchmark::State& state) {
  const CurveQ e(Rational(-7), Rational(11));
  for (auto _ : state) benchmark::DoNotOptimize(compute_theta(e).theta.size());
}
BENCHMARK(BM_Theta)->Unit(benchmark::kMicrosecond);

static void BM_Analyze(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<CurveQ> curves;
  while (curves.size() < 64) {
    const Rational a(dist(rng)), b(dist(rng));
    if (4 * a * a * a + 27 * b * b != 0) curves.emplace_back(a, b);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(curves[i++ % curves.size()]).two_adic_surjective);
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
