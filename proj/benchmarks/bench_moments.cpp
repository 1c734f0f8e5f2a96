#include <benchmark/benchmark.h>

#include "ffront/moments.hpp"

namespace {

using namespace ffront;

void BM_KernelMatrixAlternating(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const long l = moments::front_index(t, -2.0);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::kernel_matrix(PeriodicPattern::alternating(), t, l));
}
BENCHMARK(BM_KernelMatrixAlternating)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KernelMatrixGeneral(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const long l = moments::front_index(t, -2.0);
  const auto pattern = PeriodicPattern::parse("110100");
  for (auto _ : state) benchmark::DoNotOptimize(lattice::kernel_matrix(pattern, t, l));
}
BENCHMARK(BM_KernelMatrixGeneral)->Arg(10)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_MomentTable(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const auto window = moments::FrontWindow::make(t, -2.0);
  for (auto _ : state) benchmark::DoNotOptimize(moments::moment_table(window, 8));
}
BENCHMARK(BM_MomentTable)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GeneratingQ(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const long l = moments::front_index(t, -2.0);
  for (auto _ : state) benchmark::DoNotOptimize(moments::generating_q(-2.0, t, l));
}
BENCHMARK(BM_GeneratingQ)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
