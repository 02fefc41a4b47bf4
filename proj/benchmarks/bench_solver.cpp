#include <benchmark/benchmark.h>

#include <random>

#include "ward/catalog.hpp"
#include "ward/solver.hpp"

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

void bm_fixed_point_exp(benchmark::State& state) {
  int out = static_cast<int>(state.range(0));
  HSeries h = make_h(CatalogTag::pascal(2), out + 1);
  PolynomialRhs identity{{Series::zero(out + 1),
                          Series::constant(Rat(1), out + 1)}};
  IVProblem p(h, 1, identity, {Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(solve_ivp_fixed_point(p, out));
}
BENCHMARK(bm_fixed_point_exp)->Arg(48);

void bm_heaviside(benchmark::State& state) {
  int out = static_cast<int>(state.range(0));
  HSeries h = make_h(CatalogTag::pascal(2), out + 3);
  CharProblem cp(h, {Rat(-2), Rat(1), Rat(3)}, dense_series(out + 3, 11),
                 {Rat(1), Rat(0), Rat(2)});
  for (auto _ : state) benchmark::DoNotOptimize(solve_heaviside(cp, out));
}
BENCHMARK(bm_heaviside)->Arg(64);

void bm_oracle(benchmark::State& state) {
  int out = static_cast<int>(state.range(0));
  HSeries h = make_h(CatalogTag::pascal(2), out + 3);
  CharProblem cp(h, {Rat(-2), Rat(1), Rat(3)}, dense_series(out + 3, 11),
                 {Rat(1), Rat(0), Rat(2)});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_linear_solve(cp, out));
}
BENCHMARK(bm_oracle)->Arg(64);

void bm_generalized_exp(benchmark::State& state) {
  int out = static_cast<int>(state.range(0));
  HSeries h = make_h(CatalogTag::fibonomial(), out);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_exp(h, out));
}
BENCHMARK(bm_generalized_exp)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
