#include <benchmark/benchmark.h>

#include "nehari/cones.hpp"
#include "nehari/operators.hpp"
#include "nehari/solver.hpp"
#include "nehari/verify.hpp"

namespace {

using namespace nehari;

void BM_hammerstein_apply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProblemSpec prob = builtin_kernel_problem(n);
  GridFunction u = sample_directions(ConeSpec{ConeKind::Kernel}, 1, 42, n)[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_T(prob, u));
  }
}
BENCHMARK(BM_hammerstein_apply)->Arg(257)->Arg(1025)->Arg(4097);

void BM_plaplace_inverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = state.range(1) / 10.0;
  const Grid g = Grid::uniform(n);
  GridFunction h = GridFunction::from_function(
      g, [](double t) { return 1.0 + t * (1.0 - t); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(plaplace_inverse(h, p));
  }
}
BENCHMARK(BM_plaplace_inverse)
    ->Args({1025, 20})
    ->Args({1025, 30})
    ->Args({4097, 20});

void BM_alpha_moment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GridFunction v = sample_directions(ConeSpec{ConeKind::Kernel}, 1, 42, n)[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_moment(v, 2));
  }
}
BENCHMARK(BM_alpha_moment)->Arg(1025)->Arg(4097);

void BM_find_tv_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProblemSpec prob = builtin_kernel_problem(n);
  GridFunction v = sample_directions(ConeSpec{ConeKind::Kernel}, 1, 42, n)[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_tv(prob, v, prob.r, prob.effective_R()));
  }
}
BENCHMARK(BM_find_tv_kernel)->Arg(257)->Arg(1025);

}  // namespace

BENCHMARK_MAIN();
