#include <rgsl/downstream.hpp>
#include <rgsl/filtering.hpp>
#include <rgsl/objective.hpp>
#include <rgsl/robust_metric.hpp>
#include <rgsl/structure_learner.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace rgsl;

// Sparse random graph with mean degree ~4 and Gaussian features.
Graph make_graph(Index n, Index d) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Index> node(0, n - 1);
  std::vector<Edge> edges;
  while (static_cast<Index>(edges.size()) < 2 * n) {
    const Index a = node(rng);
    const Index b = node(rng);
    if (a != b) edges.emplace_back(a, b);
  }
  std::normal_distribution<double> normal;
  Matrix x(n, d);
  for (Index i = 0; i < x.size(); ++i) x(i) = normal(rng);
  return build_graph(edges, x);
}

void BM_DistanceMatrix(benchmark::State& state) {
  const Graph g = make_graph(state.range(0), 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_distance_matrix(g.features(), 1.0).values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

void BM_HighPassDense(benchmark::State& state) {
  const Graph g = make_graph(state.range(0), 256);
  const LaplacianMatrix l = normalized_laplacian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(high_pass_filter(g.features(), l, 4).values.data());
  }
}
BENCHMARK(BM_HighPassDense)->Arg(256)->Arg(1024);

void BM_HighPassSparse(benchmark::State& state) {
  const Graph g = make_graph(state.range(0), 256);
  for (auto _ : state) benchmark::DoNotOptimize(high_pass_filter(g, 4).values.data());
}
BENCHMARK(BM_HighPassSparse)->Arg(256)->Arg(1024);

void BM_EvaluateObjective(benchmark::State& state) {
  const Graph g = make_graph(state.range(0), 64);
  const FilteredFeatures s = high_pass_filter(g, 1);
  const DistanceMatrix dist = pairwise_distance_matrix(s.values, 1.0);
  const Matrix candidate = init_candidate_graph(s).values;
  const PositiveMask y = update_positive_mask(candidate, 1e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_objective(candidate, dist, y, 1.0, GradientMode::paper).gradient.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateObjective)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_SpectralClustering(benchmark::State& state) {
  const Graph g = make_graph(state.range(0), 32);
  LearnConfig cfg;
  cfg.max_epochs = 20;
  const Matrix c = learn_graph(g, cfg).c;
  KMeansOptions opts;
  opts.restarts = 5;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_clustering(c, 5, 0, opts).inertia);
}
BENCHMARK(BM_SpectralClustering)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
