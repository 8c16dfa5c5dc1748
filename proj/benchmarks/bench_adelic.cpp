#include <benchmark/benchmark.h>

#include "adelic/euler.hpp"
#include "adelic/global_fields.hpp"
#include "adelic/harmonic.hpp"
#include "adelic/theta.hpp"

using namespace adelic;

static void BM_ThetaSum2D(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0)) / 100.0;
  std::vector<std::vector<double>> columns = {{s, 0.3 * s}, {0.0, s}};
  for (auto _ : state) benchmark::DoNotOptimize(theta_sum(columns, {1e-12, 4000}).sum);
}
BENCHMARK(BM_ThetaSum2D)->Arg(100)->Arg(30)->Arg(10);

static void BM_H0Quadratic(benchmark::State& state) {
  auto K = GlobalField::quadratic(state.range(0));
  auto a = Idele::parse(K, "p2#0:1, inf#0:2");
  for (auto _ : state) benchmark::DoNotOptimize(h0(K, a, {1e-10, 4000}).to_double());
}
BENCHMARK(BM_H0Quadratic)->Arg(-1)->Arg(5)->Arg(-23);

static void BM_ChiExact(benchmark::State& state) {
  auto K = GlobalField::quadratic(-5);
  auto a = Idele::parse(K, "p2#0:3, p3#1:-2, p5#0:1, inf#0:7/3");
  for (auto _ : state) benchmark::DoNotOptimize(chi(K, a));
}
BENCHMARK(BM_ChiExact);

static void BM_FourierIndicatorShifted(benchmark::State& state) {
  LocalField F = LocalField::quadratic(3, BaseKind::PAdic, "x^2-3");
  StepFunction f = indicator(F, 0).reshaped(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f).values().size());
  state.counters["cosets"] = static_cast<double>(f.coset_count());
}
BENCHMARK(BM_FourierIndicatorShifted)->Arg(1)->Arg(2)->Arg(3);

static void BM_SerreFunctionField(benchmark::State& state) {
  auto K = GlobalField::rational_function(3);
  auto a = Idele::parse(K, "p[1,0,1]#0:-2, inf#0:1");
  for (auto _ : state) benchmark::DoNotOptimize(verify_serre(K, a).pass);
}
BENCHMARK(BM_SerreFunctionField);

BENCHMARK_MAIN();
