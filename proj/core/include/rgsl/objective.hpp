#pragma once

#include <rgsl/common.hpp>
#include <rgsl/robust_metric.hpp>

namespace rgsl {

using MaskMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Binary positive-pair indicator Y with a zero diagonal.
struct PositiveMask {
  MaskMatrix values;
  double epsilon = 0.0;

  Index size() const { return values.rows(); }
  std::size_t count() const;
  Matrix to_matrix() const { return values.cast<double>(); }
  bool operator==(const PositiveMask& other) const { return values == other.values; }
};

/// Y_ij = 1 iff (|G_ij| + |G_ji|) / 2 >= epsilon, for i != j.
PositiveMask update_positive_mask(const Matrix& g, double epsilon);

/// Wraps an arbitrary 0/1 matrix (fixed adjacency, kNN lists). Nonzero
/// entries become 1; the diagonal is cleared.
PositiveMask mask_from_matrix(const Matrix& support);

/// J = sum_ij -Y_ij log(exp(G_ij) / sum_{p != i} exp(G_ip)), evaluated with a
/// per-row max shift. Requires n >= 2.
double contrastive_regularizer(const Matrix& g, const PositiveMask& y);

/// <Dist, G> + beta * J.
double total_objective(const Matrix& g, const DistanceMatrix& dist, const PositiveMask& y,
                       double beta);

enum class GradientMode {
  /// Regularizer gradient kept only where Y_ij = 1.
  paper,
  /// Full softmax derivative on every off-diagonal entry.
  exact,
};

/// Dist + beta * dJ/dG with the diagonal zeroed.
///
/// Row i of dJ/dG is -Y_ij + r_i * softmax_ij for j != i, where r_i is the
/// number of positives in row i and softmax runs over p != i. In paper mode
/// the entries with Y_ij = 0 are set to zero.
Matrix objective_gradient(const Matrix& g, const DistanceMatrix& dist, const PositiveMask& y,
                          double beta, GradientMode mode);

struct ObjectiveEvaluation {
  double loss = 0.0;
  Matrix gradient;
};

/// Loss and gradient in one pass; the two agree with total_objective and
/// objective_gradient.
ObjectiveEvaluation evaluate_objective(const Matrix& g, const DistanceMatrix& dist,
                                       const PositiveMask& y, double beta, GradientMode mode);

}  // namespace rgsl
