#include <benchmark/benchmark.h>

#include "umpf/finspace.h"

namespace {

void BM_ValidateMetric(benchmark::State& state) {
  auto d = umpf::random_metric(static_cast<size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::validate_metric(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateMetric)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_ValidateUltrametric(benchmark::State& state) {
  auto d = umpf::random_ultrametric(static_cast<size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::validate_ultrametric(d));
}
BENCHMARK(BM_ValidateUltrametric)->RangeMultiplier(2)->Range(4, 64);

void BM_SubdominantUltrametric(benchmark::State& state) {
  auto d = umpf::random_metric(static_cast<size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::subdominant_ultrametric(d));
}
BENCHMARK(BM_SubdominantUltrametric)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
