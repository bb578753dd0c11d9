#include <graphharm/centrality.hpp>
#include <graphharm/cluster.hpp>
#include <graphharm/generators.hpp>
#include <graphharm/harmonic.hpp>
#include <graphharm/spectra.hpp>

#include <benchmark/benchmark.h>

using namespace graphharm;

namespace {

Graph bench_graph(std::size_t n) { return erdos_renyi(n, std::min(1.0, 10.0 / static_cast<double>(n)), 1); }

void BM_Decompose(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed);

void BM_BiharmonicEdges(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const SpectralDecomposition dec = decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(edge_kharmonic_squared(g, dec, 2.0));
}
BENCHMARK(BM_BiharmonicEdges)->RangeMultiplier(2)->Range(64, 512);

void BM_BiharmonicEdgesDownLaplacian(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(biharmonic_edges_via_down_laplacian(g));
}
BENCHMARK(BM_BiharmonicEdgesDownLaplacian)->RangeMultiplier(2)->Range(64, 256);

void BM_CurrentFlow(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const SpectralDecomposition dec = decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(current_flow_centrality(g, dec));
}
BENCHMARK(BM_CurrentFlow)->RangeMultiplier(2)->Range(64, 512);

void BM_SquaredFlowLoop(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const SpectralDecomposition dec = decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(squared_flow_centrality(g, dec));
}
BENCHMARK(BM_SquaredFlowLoop)->RangeMultiplier(2)->Range(64, 256);

void BM_LowRankKMeans(benchmark::State& state) {
  const LabeledGraph sbm = stochastic_block_model({50, 50, 50}, 0.6, 0.2, 3);
  const SpectralDecomposition dec = decompose(sbm.graph);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(low_rank_kharmonic_kmeans(sbm.graph, dec, 3, 10.0, std::nullopt, seed++));
  }
}
BENCHMARK(BM_LowRankKMeans);

}  // namespace

BENCHMARK_MAIN();
