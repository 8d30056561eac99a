#include <benchmark/benchmark.h>

#include <vector>

#include "hermlag/approx.hpp"
#include "hermlag/galerkin.hpp"
#include "hermlag/quad.hpp"
#include "hermlag/registry.hpp"

using namespace hermlag;

static void BM_GaussLaguerre(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(0.5, 1.0, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GaussLaguerre)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_GaussRadau(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_radau_laguerre(0.0, 1.0, n));
}
BENCHMARK(BM_GaussRadau)->RangeMultiplier(2)->Range(16, 512);

static void BM_GeneralizedHermite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite_generalized(0.5, 1.0, n));
}
BENCHMARK(BM_GeneralizedHermite)->RangeMultiplier(2)->Range(17, 513);

static void BM_HermiteFunctions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(256);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -10.0 + 20.0 * i / 255.0;
  for (auto _ : state) benchmark::DoNotOptimize(ghf_eval(0.5, 1.0, n, xs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size() * (n + 1)));
}
BENCHMARK(BM_HermiteFunctions)->RangeMultiplier(4)->Range(16, 1024);

static void BM_Evaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Expansion e{{Family::laguerre, 0.0, 1.0, n}, std::vector<double>(n + 1, 1.0)};
  std::vector<double> xs(256);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 0.1 * i;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(e, xs));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(16, 1024);

static void BM_GalerkinSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = ModelProblem::manufactured(1.0, lookup("alg_x:2").manufactured());
  GalerkinOptions o;
  o.estimate_condition = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve(p, 1.0, n, o));
}
BENCHMARK(BM_GalerkinSolve)->RangeMultiplier(2)->Range(16, 256);

BENCHMARK_MAIN();
