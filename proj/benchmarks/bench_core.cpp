#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "hamband/arrangement.hpp"
#include "hamband/bounds.hpp"
#include "hamband/construct.hpp"
#include "hamband/hypercube.hpp"
#include "hamband/oracle.hpp"

namespace {

using namespace hamband;

Arrangement random_arrangement(const Shape& shape, std::uint64_t seed) {
  std::vector<Value> values(shape.volume());
  std::iota(values.begin(), values.end(), Value{1});
  std::mt19937_64 rng(seed);
  std::shuffle(values.begin(), values.end(), rng);
  return Arrangement(shape, std::move(values));
}

void BM_Spread(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Arrangement a = random_arrangement(Shape{n, n, n}, 99);
  for (auto _ : state) benchmark::DoNotOptimize(spread(a));
  state.SetItemsProcessed(state.iterations() * a.shape().volume());
}
BENCHMARK(BM_Spread)->Arg(4)->Arg(8)->Arg(16);

void BM_GraphBandwidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Labeling lab = to_labeling(random_arrangement(Shape{n, n, n}, 7));
  for (auto _ : state) benchmark::DoNotOptimize(graph_bandwidth(lab));
}
BENCHMARK(BM_GraphBandwidth)->Arg(4)->Arg(8);

void BM_MonotoneSort(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Arrangement a = random_arrangement(Shape{n, n, n}, 1234);
  for (auto _ : state) benchmark::DoNotOptimize(monotone_sort(a));
}
BENCHMARK(BM_MonotoneSort)->Arg(4)->Arg(8);

void BM_Construct2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct(Shape{n, n + 1}));
}
BENCHMARK(BM_Construct2D)->Arg(8)->Arg(40)->Arg(200);

void BM_ConstructEven3D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct(Shape{n, n, n}));
}
BENCHMARK(BM_ConstructEven3D)->Arg(4)->Arg(8)->Arg(16);

void BM_ConstructOdd3D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct(Shape{n, n, n}));
}
BENCHMARK(BM_ConstructOdd3D)->Arg(5)->Arg(9)->Arg(15);

void BM_HarperNumbering(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harper_numbering(d));
}
BENCHMARK(BM_HarperNumbering)->Arg(8)->Arg(12)->Arg(16);

void BM_OracleExact(benchmark::State& state) {
  const Shape shape{3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_spread(shape));
}
BENCHMARK(BM_OracleExact);

void BM_CountExtensions(benchmark::State& state) {
  const Shape shape{2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(count_linear_extensions(shape));
}
BENCHMARK(BM_CountExtensions);

}  // namespace

BENCHMARK_MAIN();
