#include <benchmark/benchmark.h>

#include <vector>

#include "umpf/polynomial.h"
#include "umpf/real_roots.h"

namespace {

// prod (x - k/3) for k = 1..n, plus the irrational pair from x^2 - 2.
umpf::Polynomial sample(long n) {
  umpf::Polynomial p(1L);
  for (long k = 1; k <= n; ++k) {
    p = p * umpf::Polynomial(std::vector<umpf::Rational>{umpf::make_rational(-k, 3), 1});
  }
  return p * umpf::Polynomial(std::vector<umpf::Rational>{-2, 0, 1});
}

void BM_IsolateRealRoots(benchmark::State& state) {
  auto p = sample(state.range(0));
  auto where = umpf::Interval::closed(-10, 10);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::isolate_real_roots(p, where));
}
BENCHMARK(BM_IsolateRealRoots)->DenseRange(2, 10, 4);

void BM_SignOnInterval(benchmark::State& state) {
  auto p = sample(state.range(0));
  auto where = umpf::Interval::ray(0, true);
  for (auto _ : state) benchmark::DoNotOptimize(umpf::poly_sign_on_interval(p, where));
}
BENCHMARK(BM_SignOnInterval)->DenseRange(2, 10, 4);

}  // namespace
