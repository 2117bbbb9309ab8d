// Serial reference kernels against their OpenMP counterparts.

#include "fockqha/parallel.hpp"

#include <benchmark/benchmark.h>

namespace {

using fockqha::CartanDatum;

void BM_DimLevelSerial(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::serial::dim_level(datum, static_cast<int>(state.range(0))));
}

void BM_DimLevelParallel(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::parallel::dim_level(datum, static_cast<int>(state.range(0))));
}

void BM_Sl2SweepSerial(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::serial::sl2_sweep(datum, static_cast<int>(state.range(0))));
}

void BM_Sl2SweepParallel(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::parallel::sl2_sweep(datum, static_cast<int>(state.range(0))));
}

void BM_HookSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::serial::hook_sweep(static_cast<int>(state.range(0))));
}

void BM_HookSweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::parallel::hook_sweep(static_cast<int>(state.range(0))));
}

void BM_EWordSweepSerial(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::serial::e_word_sweep(datum, static_cast<int>(state.range(0))));
}

void BM_EWordSweepParallel(benchmark::State& state) {
  const CartanDatum datum(2);
  for (auto _ : state) benchmark::DoNotOptimize(fockqha::parallel::e_word_sweep(datum, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_DimLevelSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimLevelParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sl2SweepSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sl2SweepParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HookSweepSerial)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HookSweepParallel)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EWordSweepSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EWordSweepParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
