#include <benchmark/benchmark.h>

#include <random>

#include "bbdec/bouncers.hpp"
#include "bbdec/far_direct.hpp"
#include "bbdec/far_mitm.hpp"
#include "bbdec/halting_segment.hpp"
#include "bbdec/sat.hpp"
#include "bbdec/simulator.hpp"

using namespace bbdec;

namespace {

constexpr const char* kChampion = "1RB1LC_1RC1RB_1RD0LE_1LA1LD_---0LA";
constexpr const char* kBouncer = "1RB1LE_1LC1RD_1LB1RC_1LA0RD_---0LA";
constexpr const char* kFarMachine = "1RB0LD_1LC1RA_0RB0LC_---1LA";

void BM_SimulateChampion(benchmark::State& state) {
  auto t = TransitionTable::Parse(kChampion);
  for (auto _ : state) benchmark::DoNotOptimize(Simulate(t, static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateChampion)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_FarDirect(benchmark::State& state) {
  auto t = TransitionTable::Parse(kFarMachine);
  for (auto _ : state) benchmark::DoNotOptimize(DecideFarDirect(t, 2, true));
}
BENCHMARK(BM_FarDirect);

void BM_FarDirectChampion(benchmark::State& state) {
  auto t = TransitionTable::Parse(kChampion);
  for (auto _ : state) benchmark::DoNotOptimize(DecideFarDirect(t, static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_FarDirectChampion)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FarMitm(benchmark::State& state) {
  auto t = TransitionTable::Parse(kFarMachine);
  for (auto _ : state) benchmark::DoNotOptimize(DecideFarMitm(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FarMitm)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_HaltingSegment(benchmark::State& state) {
  auto t = TransitionTable::Parse(kChampion);
  for (auto _ : state) benchmark::DoNotOptimize(DecideHaltingSegment(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HaltingSegment)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Bouncers(benchmark::State& state) {
  auto t = TransitionTable::Parse(kBouncer);
  for (auto _ : state) benchmark::DoNotOptimize(DecideBouncers(t));
}
BENCHMARK(BM_Bouncers)->Unit(benchmark::kMillisecond);

void BM_RandomSat(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int vars = static_cast<int>(state.range(0));
  Cnf cnf;
  cnf.num_vars = vars;
  std::uniform_int_distribution<int> var(1, vars);
  for (int i = 0; i < vars * 42 / 10; ++i) {
    std::vector<int> c;
    for (int k = 0; k < 3; ++k) c.push_back(rng() % 2 ? var(rng) : -var(rng));
    cnf.AddClause(c);
  }
  for (auto _ : state) benchmark::DoNotOptimize(SolveCnf(cnf));
}
BENCHMARK(BM_RandomSat)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
