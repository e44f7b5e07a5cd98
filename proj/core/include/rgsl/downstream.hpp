#pragma once

#include <rgsl/common.hpp>

#include <span>
#include <vector>

namespace rgsl {

struct KMeansOptions {
  int restarts = 20;
  int max_iterations = 300;
  double tolerance = 1e-6;  ///< stop when total squared center shift falls below
};

struct ClusterAssignment {
  std::vector<int> labels;
  int clusters = 0;
  double inertia = 0.0;
  std::uint64_t seed = 0;
  int restart = 0;  ///< index of the winning restart
};

/// k-means++ seeded Lloyd iterations; restart r draws from a generator
/// seeded with (seed, r), so different seeds share no restarts. The result
/// with the lowest inertia wins, ties going to the earliest restart.
ClusterAssignment kmeans(const Matrix& points, int clusters, std::uint64_t seed,
                         const KMeansOptions& options = {});

/// Normalized spectral clustering of a symmetric nonnegative affinity.
///
/// The diagonal of `affinity` is ignored. Uses the `clusters` eigenvectors
/// of I - D^{-1/2} W D^{-1/2} with the smallest eigenvalues, row-normalized,
/// then kmeans. Throws InvalidInput unless 2 <= clusters <= n, and
/// NumericalError when W has no off-diagonal weight.
ClusterAssignment spectral_clustering(const Matrix& affinity, int clusters, std::uint64_t seed,
                                      const KMeansOptions& options = {});

/// The spectral embedding used by spectral_clustering.
Matrix spectral_embedding(const Matrix& affinity, int dimensions);

struct ClassifierOutput {
  Matrix scores;  ///< n x g
  std::vector<int> predictions;
  double gamma = 0.0;
  /// Rows whose scores are all zero; predicted as class 0.
  std::size_t undetermined = 0;
};

struct LgcOptions {
  double gamma = 0.1;
  /// Add the identity to the affinity before normalizing.
  bool self_loop = false;
};

/// Symmetric normalized Laplacian I - D^{-1/2} W D^{-1/2} of an affinity,
/// with L_ii = 0 for nodes of zero degree.
Matrix affinity_laplacian(const Matrix& affinity);

/// One-hot label matrix: row i is e_{labels[i]} when train_mask[i], else 0.
Matrix label_matrix(std::span<const int> labels, std::span<const std::uint8_t> train_mask,
                    int classes);

/// Local and global consistency: M = gamma (L' + gamma I)^{-1} Y with L' the
/// affinity Laplacian. Throws InvalidInput for gamma <= 0 or shape errors.
ClassifierOutput lgc_classify(const Matrix& affinity, std::span<const int> labels,
                              std::span<const std::uint8_t> train_mask, int classes,
                              const LgcOptions& options = {});

/// Row-wise argmax, lowest index on ties.
std::vector<int> argmax_rows(const Matrix& scores);

}  // namespace rgsl
