#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "poplab/enumerator.hpp"
#include "poplab/permutation.hpp"
#include "poplab/pop.hpp"
#include "poplab/scan.hpp"
#include "poplab/series.hpp"

using namespace poplab;

static void BM_CountAvoidersLength4(benchmark::State& state) {
  const Pop p = parse_pop("k=4; 1>2, 2>4, 1>3");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(p, n));
}
BENCHMARK(BM_CountAvoidersLength4)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_CountAvoidersLength5(benchmark::State& state) {
  const Pop p = parse_pop("k=5; 1>2, 2>3, 3>4");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(p, n));
}
BENCHMARK(BM_CountAvoidersLength5)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_CountAvoidersJobs(benchmark::State& state) {
  const Pop p = parse_pop("k=4; 3>1, 1>2, 4>1");
  CountOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(p, 10, opts));
}
BENCHMARK(BM_CountAvoidersJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ContainsPop(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<int> v(static_cast<std::size_t>(state.range(0)));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  const Pop p = parse_pop("k=5; 1>2, 1>3, 4>2, 4>3");
  for (auto _ : state) benchmark::DoNotOptimize(contains_pop(v, p));
}
BENCHMARK(BM_ContainsPop)->RangeMultiplier(2)->Range(8, 64);

static void BM_ScanLength4(benchmark::State& state) {
  ScanOptions opts;
  opts.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_pops(opts));
}
BENCHMARK(BM_ScanLength4)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SqrtSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TruncatedSeries a = TruncatedSeries::from_polynomial({1, -6, 1}, order);
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(a));
}
BENCHMARK(BM_SqrtSeries)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
