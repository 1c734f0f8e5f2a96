#include <benchmark/benchmark.h>

#include "ffront/specfun.hpp"

namespace {

using namespace ffront::specfun;

void BM_BesselRow(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  const int n_max = bessel_full_order(x);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j_row(x, n_max));
  state.SetComplexityN(n_max);
}
BENCHMARK(BM_BesselRow)->RangeMultiplier(10)->Range(40, 40000)->Complexity(benchmark::oN);

void BM_AiryGrid(benchmark::State& state) {
  for (auto _ : state) {
    double acc = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.01) acc += airy_ai(x).ai;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AiryGrid);

void BM_AiryTail(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airy_tail_integral(-3.7));
}
BENCHMARK(BM_AiryTail);

void BM_GaussLegendre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(n, -1.0, 1.0));
}
BENCHMARK(BM_GaussLegendre)->RangeMultiplier(2)->Range(16, 512);

}  // namespace
