#include <rgsl/graph.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

namespace rgsl {

const std::vector<int>& Graph::labels() const {
  if (!labels_) throw InvalidInput("graph has no labels");
  return *labels_;
}

int Graph::num_classes() const {
  if (!labels_ || labels_->empty()) return 0;
  return *std::max_element(labels_->begin(), labels_->end()) + 1;
}

bool Graph::has_edge(Index i, Index j) const {
  const auto& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

Matrix Graph::dense_adjacency() const {
  const Index n = num_nodes();
  Matrix a = Matrix::Zero(n, n);
  for (const auto& [i, j] : edges_) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

Eigen::SparseMatrix<double> Graph::sparse_adjacency() const {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges_.size());
  for (const auto& [i, j] : edges_) {
    triplets.emplace_back(i, j, 1.0);
    triplets.emplace_back(j, i, 1.0);
  }
  Eigen::SparseMatrix<double> a(num_nodes(), num_nodes());
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
  return build_graph(edges, features_, labels_);
}

Graph Graph::with_features(Matrix features) const {
  if (features.rows() != num_nodes()) {
    throw InvalidInput("replacement features have " + std::to_string(features.rows()) +
                       " rows, graph has " + std::to_string(num_nodes()) + " nodes");
  }
  return build_graph(edges_, std::move(features), labels_);
}

Graph build_graph(std::span<const Edge> edges, Matrix features,
                  std::optional<std::vector<int>> labels) {
  const Index n = features.rows();
  if (labels) {
    if (static_cast<Index>(labels->size()) != n) {
      throw InvalidInput("labels have " + std::to_string(labels->size()) +
                         " entries but features have " + std::to_string(n) + " rows");
    }
    for (std::size_t v = 0; v < labels->size(); ++v) {
      if ((*labels)[v] < 0) {
        throw InvalidInput("negative class id at node " + std::to_string(v));
      }
    }
  }

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t self_loops = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") references a node outside [0, " + std::to_string(n) +
                         "); feature matrix has " + std::to_string(n) + " rows");
    }
    if (u == v) {
      ++self_loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (self_loops > 0) {
    std::clog << "warning: dropped " << self_loops << " self-loop(s)\n";
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.edges_ = std::move(canon);
  g.features_ = std::move(features);
  g.labels_ = std::move(labels);
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [i, j] : g.edges_) {
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

namespace {

// D^{-1/2} for D = (A + I) 1; every entry is at least 1.
Vector inv_sqrt_self_loop_degrees(const Graph& g) {
  Vector d(g.num_nodes());
  for (Index i = 0; i < g.num_nodes(); ++i) {
    d(i) = 1.0 / std::sqrt(static_cast<double>(g.degree(i) + 1));
  }
  return d;
}

}  // namespace

LaplacianMatrix normalized_laplacian(const Graph& g) {
  const Index n = g.num_nodes();
  const Vector s = inv_sqrt_self_loop_degrees(g);
  Matrix l = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) l(i, i) = 1.0 - s(i) * s(i);
  for (const auto& [i, j] : g.edges()) {
    const double w = -s(i) * s(j);
    l(i, j) = w;
    l(j, i) = w;
  }
  return {std::move(l)};
}

Eigen::SparseMatrix<double> sparse_normalized_laplacian(const Graph& g) {
  const Vector s = inv_sqrt_self_loop_degrees(g);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.num_edges() + static_cast<std::size_t>(g.num_nodes()));
  for (Index i = 0; i < g.num_nodes(); ++i) {
    triplets.emplace_back(i, i, 1.0 - s(i) * s(i));
  }
  for (const auto& [i, j] : g.edges()) {
    triplets.emplace_back(i, j, -s(i) * s(j));
    triplets.emplace_back(j, i, -s(i) * s(j));
  }
  Eigen::SparseMatrix<double> l(g.num_nodes(), g.num_nodes());
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

}  // namespace rgsl
