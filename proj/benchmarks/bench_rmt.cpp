#include <benchmark/benchmark.h>

#include "ffront/rmt.hpp"

namespace {

using namespace ffront;

void BM_FredholmH(benchmark::State& state) {
  const rmt::FredholmOptions options{.nodes = static_cast<int>(state.range(0)), .check_doubling = false};
  for (auto _ : state) benchmark::DoNotOptimize(rmt::fredholm_h(1.0, -2.0, options));
}
BENCHMARK(BM_FredholmH)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_Tw1CdfChecked(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmt::tw1_cdf(-2.0));
}
BENCHMARK(BM_Tw1CdfChecked)->Unit(benchmark::kMicrosecond);

void BM_PredictedMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmt::predicted_moment(1, -4.0));
}
BENCHMARK(BM_PredictedMoment)->Unit(benchmark::kMicrosecond);

}  // namespace
