#include <benchmark/benchmark.h>

#include <random>

#include "ward/series.hpp"

using namespace ward;

namespace {

Series dense_series(int trunc, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  for (auto& c : v) c = Rat(num(gen), den(gen));
  return Series(std::move(v));
}

void bm_cauchy_mul(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  Series a = dense_series(trunc, 1), b = dense_series(trunc, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_cauchy_mul)->Arg(64)->Arg(256);

void bm_mul_inverse(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  Series a = dense_series(trunc, 3);
  if (a.coeff(0).is_zero()) a = a + Series::constant(Rat(1), trunc);
  for (auto _ : state) benchmark::DoNotOptimize(mul_inverse(a));
}
BENCHMARK(bm_mul_inverse)->Arg(128);

void bm_compose(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  Series f = dense_series(trunc, 4);
  Series g = dense_series(trunc, 5);
  g = g - Series::constant(g.coeff(0), trunc);  // inner constant must vanish
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(bm_compose)->Arg(64);

void bm_hadamard(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  Series a = dense_series(trunc, 6), b = dense_series(trunc, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hadamard(a, b));
}
BENCHMARK(bm_hadamard)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
