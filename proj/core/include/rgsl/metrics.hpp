#pragma once

#include <rgsl/common.hpp>

#include <span>
#include <vector>

namespace rgsl {

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// method, O(n^3)). Entry r of the result is the column assigned to row r.
std::vector<Index> hungarian_min_cost(const Matrix& cost);

/// Maps each predicted cluster id to a class id maximizing agreement.
/// Clusters left without a class map to -1.
std::vector<int> best_cluster_mapping(std::span<const int> pred, std::span<const int> truth);

/// Fraction of samples correct under the best cluster-to-class bijection.
double clustering_accuracy(std::span<const int> pred, std::span<const int> truth);

/// Mutual information over the arithmetic mean of the two entropies.
/// 1 for two identical single-cluster partitions, 0 if one partition has
/// zero entropy and they differ.
double nmi(std::span<const int> pred, std::span<const int> truth);

/// Unweighted mean over truth classes of per-class F1 after the ACC mapping.
double macro_f1(std::span<const int> pred, std::span<const int> truth);

/// Fraction of masked nodes with pred == truth. Throws on an empty mask.
double classification_accuracy(std::span<const int> pred, std::span<const int> truth,
                               std::span<const std::uint8_t> mask);

struct ClusteringScores {
  double acc = 0.0;
  double nmi = 0.0;
  double f1 = 0.0;
};

ClusteringScores score_clustering(std::span<const int> pred, std::span<const int> truth);

struct Summary {
  double mean = 0.0;
  double std = 0.0;  ///< population standard deviation
};

Summary summarize(std::span<const double> values);

}  // namespace rgsl
