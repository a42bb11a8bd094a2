#include <benchmark/benchmark.h>

#include "eulext/extension.hpp"
#include "eulext/graph.hpp"
#include "eulext/prob_model.hpp"

using namespace eulext;

namespace {

void BM_SampleHomogeneous(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = EdgeProbabilityModel::homogeneous(n, 0.3);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_graph(model, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleHomogeneous)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_AlphaStatsFamily(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = EdgeProbabilityModel::example_family(n, 0.4, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_stats(model));
}
BENCHMARK(BM_AlphaStatsFamily)->RangeMultiplier(4)->Range(256, 4096);

void BM_Extend(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const Graph g = sample_graph(EdgeProbabilityModel::example_family(n, 0.4, 0.2), rng);
  for (auto _ : state) {
    Rng r(3);
    benchmark::DoNotOptimize(extend(g, r));
  }
}
BENCHMARK(BM_Extend)->RangeMultiplier(2)->Range(64, 1024);

void BM_EulerCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const Graph g = sample_graph(EdgeProbabilityModel::homogeneous(n, 0.3), rng);
  Rng r(5);
  const Graph h = apply_extension(g, extend(g, r));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_circuit(h));
}
BENCHMARK(BM_EulerCircuit)->RangeMultiplier(2)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
