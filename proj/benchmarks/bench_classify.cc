#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "umpf/classifier.h"
#include "umpf/dsl.h"
#include "umpf/search.h"

namespace {

const std::vector<std::string> kFixtures = {"x_over_1px", "min1x", "xsq", "staircase",
                                            "ex55", "step", "x_over_1pxsq", "g65"};

umpf::PiecewiseFunction load(const std::string& stem) {
  return umpf::load_function(std::string(UMPF_FUNCTIONS_DIR) + "/" + stem + ".fn");
}

void BM_ClassifyAll(benchmark::State& state) {
  const auto& name = kFixtures[static_cast<size_t>(state.range(0))];
  auto f = load(name);
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::classify_all(f));
}
BENCHMARK(BM_ClassifyAll)->DenseRange(0, static_cast<int>(kFixtures.size()) - 1);

// Exact affine decision on a staircase with many pieces.
void BM_ClassifyMAffine(benchmark::State& state) {
  std::string src = "piecewise\n";
  long n = state.range(0);
  for (long i = 0; i < n; ++i) {
    src += (i == 0 ? "[" : "(") + std::to_string(i) + ", ";
    src += i + 1 == n ? "inf): " : std::to_string(i + 1) + "]: ";
    src += i == 0 ? "x\n" : std::to_string(i + 1) + "\n";
  }
  auto f = umpf::parse_function(src);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::classify_M(f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ClassifyMAffine)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_CrossValidate(benchmark::State& state) {
  auto f = load("x_over_1px");
  auto report = umpf::classify_all(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(umpf::cross_validate(f, report, static_cast<size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_CrossValidate)->Arg(50)->Arg(200);

}  // namespace
