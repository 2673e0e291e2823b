#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "boxcub/experiment.hpp"
#include "boxcub/families.hpp"
#include "boxcub/oracle.hpp"
#include "boxcub/pipeline.hpp"
#include "boxcub/recognition.hpp"

namespace {

using namespace boxcub;

void BM_TightnessPipeline(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tightness_experiment(k, n));
  }
}
BENCHMARK(BM_TightnessPipeline)
    ->Args({2, 64})
    ->Args({2, 256})
    ->Args({4, 256})
    ->Args({2, 1024})
    ->Unit(benchmark::kMillisecond);

void BM_PipelineRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs;
  for (int i = 0; i < 16; ++i) graphs.push_back(random_graph(n, 0.5, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        construct_cube_representation(graphs[i++ % graphs.size()], PipelineOptions{}));
  }
}
BENCHMARK(BM_PipelineRandom)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ExactCubicityStar(benchmark::State& state) {
  const int leaves = static_cast<int>(state.range(0));
  const Graph g = star(leaves);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_cubicity(g, leaves + 1));
  }
}
BENCHMARK(BM_ExactCubicityStar)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ExactBoxicityRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  const Graph g = random_graph(n, 0.5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_boxicity(g));
  }
}
BENCHMARK(BM_ExactBoxicityRandom)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_IntervalRecognitionPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = path_star_glue(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_interval_representation(g));
  }
}
BENCHMARK(BM_IntervalRecognitionPath)->RangeMultiplier(4)->Range(4, 256);

void BM_UnitRecognitionComplete(benchmark::State& state) {
  const Graph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_unit_interval_representation(g));
  }
}
BENCHMARK(BM_UnitRecognitionComplete)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
