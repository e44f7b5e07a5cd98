#pragma once

#include <rgsl/graph.hpp>

namespace rgsl {

/// Mean over nodes of the fraction of neighbors sharing the node's label.
/// Nodes without neighbors contribute 0. Throws InvalidInput if unlabeled.
double homophily(const Graph& g);

/// Homophily of an arbitrary symmetric 0/1 support (e.g. a learned mask),
/// same convention as homophily(Graph). Diagonal entries are ignored.
double support_homophily(const Matrix& support, std::span<const int> labels);

/// Fraction of nonzero adjacency entries, 2|E| / n^2.
double sparsity(const Graph& g);

/// Tr(S^T L S) with the self-loop normalized Laplacian. Equals half the sum
/// over ordered neighbor pairs of ||S_i / sqrt(D_i) - S_j / sqrt(D_j)||^2.
double dirichlet_energy(const Matrix& signals, const Graph& g);

/// Sum over undirected edges of ||S_i - S_j||^2 (unnormalized form), each
/// edge counted once. Zero for any signal that is constant across rows.
double dirichlet_energy_edge_sum(const Matrix& signals, const Graph& g);

/// Per-node share of the trace-form energy. Entry i is
/// 1/2 sum_j A_ij ||S_i / sqrt(D_i) - S_j / sqrt(D_j)||^2, and the entries sum
/// to dirichlet_energy(signals, g).
Vector node_dirichlet_energy(const Matrix& signals, const Graph& g);

struct OutlierPolicy {
  /// Nodes with degree > mean + high_degree_sigmas * std are outliers, as
  /// are nodes with exactly one edge.
  double high_degree_sigmas = 2.0;
};

struct OutlierEnergy {
  /// Mean over outliers of node energy / total energy. 0 if total is 0.
  double ratio = 0.0;
  std::size_t count = 0;
};

std::vector<Index> degree_outliers(const Graph& g, const OutlierPolicy& policy = {});

OutlierEnergy outlier_energy_ratio(const Graph& g, const Matrix& signals,
                                   const OutlierPolicy& policy = {});

struct DiagnosticsReport {
  double homophily = 0.0;
  double sparsity = 0.0;
  double dirichlet_energy = 0.0;
  double outlier_ratio = 0.0;
  std::size_t outlier_count = 0;
};

/// All diagnostics, with the raw features as the signal.
DiagnosticsReport diagnose(const Graph& g, const OutlierPolicy& policy = {});

}  // namespace rgsl
