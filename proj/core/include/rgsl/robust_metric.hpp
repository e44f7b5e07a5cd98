#pragma once

#include <rgsl/common.hpp>

#include <span>

namespace rgsl {

/// Adaptive alpha-norm of a difference with Euclidean length c:
///   g(alpha) = (1 + alpha) c^2 / (c + alpha).
/// Tends to c as alpha -> 0 and to c^2 as alpha -> inf; monotone in alpha
/// (increasing for c > 1, decreasing for c < 1). Throws InvalidInput unless
/// alpha > 0.
double alpha_norm_of_length(double length, double alpha);

double alpha_norm(std::span<const double> u, std::span<const double> v, double alpha);
double alpha_norm(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v,
                  double alpha);

/// Dense symmetric matrix of pairwise row distances with zero diagonal.
struct DistanceMatrix {
  Matrix values;
  double alpha = 0.0;  ///< 0 marks the squared-Euclidean variant
};

/// Entry (i, j) is alpha_norm(S_i, S_j, alpha).
DistanceMatrix pairwise_distance_matrix(const Matrix& signals, double alpha);

/// Entry (i, j) is ||S_i - S_j||^2, the f(p = 2) cost.
DistanceMatrix pairwise_squared_distance_matrix(const Matrix& signals);

/// The search grid used for alpha in parameter sweeps.
inline constexpr double kAlphaGrid[] = {0.01, 0.05, 0.1, 0.5, 1, 5, 10, 50, 100};

}  // namespace rgsl
