#include "hermite2d/determinant.hpp"
#include "hermite2d/hermite.hpp"
#include "hermite2d/suites.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hermite2d;

const GMatrix& bench_g() {
  static const GMatrix g = parse_gmatrix("2,i;-i,2");
  return g;
}

void BM_ComplexHermite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complex_hermite(n, n));
}
BENCHMARK(BM_ComplexHermite)->Arg(4)->Arg(8)->Arg(12);

void BM_DeformedSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deformed_sum(bench_g(), n, n));
}
BENCHMARK(BM_DeformedSum)->Arg(3)->Arg(6);

void BM_DeformedRodrigues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deformed_rodrigues(bench_g(), n, n));
}
BENCHMARK(BM_DeformedRodrigues)->Arg(3)->Arg(6);

void BM_SandwichRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sandwich_route(bench_g(), n, n));
}
BENCHMARK(BM_SandwichRoute)->Arg(3)->Arg(6);

void BM_GfTable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_table(bench_g(), d));
}
BENCHMARK(BM_GfTable)->Arg(6)->Arg(12);

void BM_HankelDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HankelSpec spec{bench_g(), n, 1, BigRational(1, 2), BigRational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(exact_determinant(hankel_matrix(spec)));
}
BENCHMARK(BM_HankelDeterminant)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
