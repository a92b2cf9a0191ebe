#include <benchmark/benchmark.h>

#include "ysc/crystal.hpp"
#include "ysc/oracle.hpp"
#include "ysc/plethysm.hpp"
#include "ysc/qchar.hpp"

namespace {

void BM_BuildCrystal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const ysc::Operator op(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ysc::build(n, r, op, 1));
  }
  state.SetItemsProcessed(state.iterations() *
                          ysc::build(n, r, op, 1).node_count());
}
BENCHMARK(BM_BuildCrystal)->Args({2, 60})->Args({3, 40})->Args({4, 30});

void BM_Peel(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ysc::qchar::peel(ysc::qchar::q_binom(r + 1, 4)));
  }
}
BENCHMARK(BM_Peel)->Arg(50)->Arg(100);

void BM_RankProfile(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ysc::oracle::rank_profile(4, m));
  }
}
BENCHMARK(BM_RankProfile)->Arg(50)->Arg(100);

void BM_Character(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ysc::plethysm::character(4, r));
  }
}
BENCHMARK(BM_Character)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
