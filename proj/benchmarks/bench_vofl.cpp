#include <benchmark/benchmark.h>

#include <cmath>

#include "vofl/cli/problems.hpp"
#include "vofl/collocation.hpp"
#include "vofl/expr.hpp"
#include "vofl/laguerre.hpp"
#include "vofl/special_functions.hpp"
#include "vofl/vof_operators.hpp"

namespace {

void BM_GaussRule(benchmark::State& state) {
  const vofl::LaguerreParams p(2.0, 6.0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vofl::gauss_rule(p, N));
  state.SetComplexityN(N);
}
BENCHMARK(BM_GaussRule)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_FracIntegralBasis(benchmark::State& state) {
  const vofl::LaguerreParams p(2.0, 6.0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vofl::frac_integral_basis(p, 0.5, N, 0.7));
  state.SetComplexityN(N);
}
BENCHMARK(BM_FracIntegralBasis)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oN);

void BM_CaputoRowVariable(benchmark::State& state) {
  const vofl::LaguerreParams p(3.0, 6.0);
  const vofl::OrderFunction order([](double x) { return (9.0 + std::sin(x)) / 10.0; }, 0.9, 0.99);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vofl::caputo_row(p, order, N, 0.4));
}
BENCHMARK(BM_CaputoRowVariable)->Arg(20)->Arg(80);

void BM_Interpolate(benchmark::State& state) {
  const auto rule = vofl::gauss_rule(vofl::LaguerreParams(2.0, 6.0), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vofl::interpolate(rule, [](double x) { return std::exp(x); }));
  }
}
BENCHMARK(BM_Interpolate)->Arg(20)->Arg(80);

void BM_Example1Table1Cell(benchmark::State& state) {
  const vofl::LaguerreParams p(2.0, 6.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vofl::cli::example1_max_error(p, 20, [](double) { return 0.5; }, 1001));
  }
}
BENCHMARK(BM_Example1Table1Cell)->Unit(benchmark::kMillisecond);

void BM_AssembleExample2(benchmark::State& state) {
  const auto spec = vofl::cli::example2_spec(vofl::LaguerreParams(3.0, 6.0), static_cast<int>(state.range(0)),
                                             [](double x) { return (9.0 + std::sin(x - 10.0)) / 5.0; }, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(vofl::assemble(spec));
}
BENCHMARK(BM_AssembleExample2)->Arg(10)->Arg(20);

void BM_SolveSystem(benchmark::State& state) {
  const auto spec = vofl::cli::example2_spec(vofl::LaguerreParams(3.0, 6.0), static_cast<int>(state.range(0)),
                                             [](double) { return 1.5; }, 1.0);
  const auto system = vofl::assemble(spec);
  for (auto _ : state) benchmark::DoNotOptimize(vofl::solve_system(system, spec.params));
}
BENCHMARK(BM_SolveSystem)->Arg(10)->Arg(20);

void BM_RegLowerIncompleteGamma(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vofl::reg_lower_incomplete_gamma(0.5, x));
    x = x > 2.0 ? 0.0 : x + 1e-3;
  }
}
BENCHMARK(BM_RegLowerIncompleteGamma);

void BM_ExprEval(benchmark::State& state) {
  const auto e = vofl::parse("(9 + sin(x - 10))/5");
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e(x));
    x += 1e-6;
  }
}
BENCHMARK(BM_ExprEval);

}  // namespace

BENCHMARK_MAIN();
