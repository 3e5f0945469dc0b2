#include <benchmark/benchmark.h>

#include "triplet/characters.hpp"

using namespace triplet;

static void bm_weyl_enumerate(benchmark::State& state) {
  const RootSystem rs(CartanType::parse(state.range(0) == 6 ? "E6" : "D5"));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_enumerate(rs).size());
}
BENCHMARK(bm_weyl_enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void bm_eta_inv_pow(benchmark::State& state) {
  const auto order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_inv_pow(4, order).order());
}
BENCHMARK(bm_eta_inv_pow)->Arg(30)->Arg(50);

static void bm_w_char(benchmark::State& state) {
  const ModelParams mp(RootSystem(CartanType::parse("D4")), 7);
  const WeylGroup group(mp.rs());
  const LambdaParam lam{mp.rs().zero(), Digits(4, 0), 7};
  for (auto _ : state) benchmark::DoNotOptimize(w_char(mp, group, mp.rs().zero(), lam, 30).order());
}
BENCHMARK(bm_w_char)->Unit(benchmark::kMillisecond);

static void bm_module_char(benchmark::State& state) {
  const ModelParams mp(RootSystem(CartanType::parse("A2")), 3);
  const WeylGroup group(mp.rs());
  const LambdaParam lam{mp.rs().zero(), Digits(2, 0), 3};
  for (auto _ : state) benchmark::DoNotOptimize(module_char(mp, group, lam, 20).order());
}
BENCHMARK(bm_module_char)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
