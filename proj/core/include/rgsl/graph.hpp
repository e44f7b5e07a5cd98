#pragma once

#include <rgsl/common.hpp>

#include <Eigen/SparseCore>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rgsl {

using Edge = std::pair<Index, Index>;

/// Undirected, unweighted attributed graph.
///
/// Edges are stored once per unordered pair with first < second, sorted
/// lexicographically. Self-loops and duplicates never appear.
class Graph {
 public:
  Graph() = default;

  Index num_nodes() const { return features_.rows(); }
  Index num_features() const { return features_.cols(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Matrix& features() const { return features_; }
  bool has_labels() const { return labels_.has_value(); }
  /// Throws InvalidInput when the graph carries no labels.
  const std::vector<int>& labels() const;
  /// Number of classes, max label + 1. Zero when unlabeled.
  int num_classes() const;

  /// Neighbor lists, sorted ascending.
  const std::vector<std::vector<Index>>& neighbors() const { return adjacency_; }
  Index degree(Index i) const { return static_cast<Index>(adjacency_[i].size()); }
  bool has_edge(Index i, Index j) const;

  /// Dense 0/1 adjacency A (no self-loops).
  Matrix dense_adjacency() const;
  Eigen::SparseMatrix<double> sparse_adjacency() const;

  Graph with_edges(std::vector<Edge> edges) const;
  Graph with_features(Matrix features) const;

 private:
  friend Graph build_graph(std::span<const Edge>, Matrix, std::optional<std::vector<int>>);

  std::vector<Edge> edges_;
  Matrix features_;
  std::optional<std::vector<int>> labels_;
  std::vector<std::vector<Index>> adjacency_;
};

/// Canonicalizes an edge list into a Graph.
///
/// The node count is the feature row count. Pairs are reordered to i < j and
/// deduplicated; self-loops are dropped with a warning on stderr. Throws
/// InvalidInput when an endpoint is outside [0, n), when labels do not have
/// n entries, or when a label is negative.
Graph build_graph(std::span<const Edge> edges, Matrix features,
                  std::optional<std::vector<int>> labels = std::nullopt);

/// Dense symmetric normalized Laplacian with self-loops:
/// L = I - D^{-1/2} (A + I) D^{-1/2}, D = (A + I) 1.
struct LaplacianMatrix {
  Matrix values;
};

LaplacianMatrix normalized_laplacian(const Graph& g);

/// Same operator as normalized_laplacian in compressed sparse form.
Eigen::SparseMatrix<double> sparse_normalized_laplacian(const Graph& g);

}  // namespace rgsl
