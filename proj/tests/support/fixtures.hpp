#pragma once

#include <rgsl/graph.hpp>

#include <random>
#include <vector>

namespace rgsl::fixture {

inline Matrix random_matrix(Index rows, Index cols, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, scale);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

/// Erdos-Renyi graph with Gaussian features.
inline Graph random_graph(Index n, double p, Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return build_graph(edges, random_matrix(n, d, seed ^ 0x9e3779b97f4a7c15ULL));
}

inline Graph path_graph(Index n, Index d = 1) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(edges, Matrix::Ones(n, d));
}

/// Cycle: every node has degree 2.
inline Graph cycle_graph(Index n, Index d = 1) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(edges, Matrix::Ones(n, d));
}

inline Graph complete_graph(Index n, Index d = 1) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return build_graph(edges, Matrix::Ones(n, d));
}

/// Two disjoint 3-cliques with features centered at well-separated points.
inline Graph two_triangles() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  Matrix x(6, 2);
  x << 5.0, 0.1, 5.2, 0.0, 4.9, 0.2, 0.1, 5.0, 0.0, 5.1, 0.2, 4.8;
  return build_graph(edges, x, std::vector<int>{0, 0, 0, 1, 1, 1});
}

struct HeterophilicSpec {
  Index nodes = 150;
  int classes = 3;
  Index features = 60;
  double mean_degree = 4.0;
  double homophily = 0.1;        ///< probability an edge joins same-class nodes
  double word_rate = 0.05;        ///< background on-probability of a feature
  double class_word_rate = 0.35;  ///< on-probability of a class-specific feature
  std::uint64_t seed = 1;
};

/// Contextual block model in the style of bag-of-words web-page graphs: each
/// class owns a slice of the feature columns that its nodes switch on more
/// often, and most edges join different classes.
inline Graph heterophilic_graph(const HeterophilicSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<int> labels(static_cast<std::size_t>(spec.nodes));
  for (Index i = 0; i < spec.nodes; ++i) labels[i] = static_cast<int>(i % spec.classes);
  std::shuffle(labels.begin(), labels.end(), rng);

  const Index slice = spec.features / spec.classes;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix x = Matrix::Zero(spec.nodes, spec.features);
  for (Index i = 0; i < spec.nodes; ++i) {
    for (Index f = 0; f < spec.features; ++f) {
      const bool own = f / slice == labels[i];
      if (u(rng) < (own ? spec.class_word_rate : spec.word_rate)) x(i, f) = 1.0;
    }
  }

  std::vector<std::vector<Index>> by_class(static_cast<std::size_t>(spec.classes));
  for (Index i = 0; i < spec.nodes; ++i) by_class[labels[i]].push_back(i);
  const auto target = static_cast<std::size_t>(spec.mean_degree * spec.nodes / 2.0);
  std::uniform_int_distribution<Index> node(0, spec.nodes - 1);
  std::vector<Edge> edges;
  while (edges.size() < target) {
    const Index a = node(rng);
    Index b = a;
    if (u(rng) < spec.homophily) {
      const auto& pool = by_class[labels[a]];
      b = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    } else {
      while (labels[b] == labels[a]) b = node(rng);
    }
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return build_graph(edges, x, labels);
}

}  // namespace rgsl::fixture
