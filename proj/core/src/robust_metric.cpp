#include <rgsl/robust_metric.hpp>

#include <cmath>
#include <string>

namespace rgsl {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput("alpha must be a positive finite number, got " + std::to_string(alpha));
  }
}

// Row-major copy so that row differences are contiguous.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Fn>
Matrix pairwise(const Matrix& signals, Fn&& from_length_squared) {
  const Index n = signals.rows();
  const RowMatrix s = signals;
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double sq = (s.row(i) - s.row(j)).squaredNorm();
      const double d = from_length_squared(sq);
      out(i, j) = d;
      out(j, i) = d;
    }
  }
  return out;
}

}  // namespace

double alpha_norm_of_length(double length, double alpha) {
  check_alpha(alpha);
  if (length == 0.0) return 0.0;
  return (1.0 + alpha) * length * length / (length + alpha);
}

double alpha_norm(std::span<const double> u, std::span<const double> v, double alpha) {
  if (u.size() != v.size()) {
    throw InvalidInput("alpha_norm: vectors have lengths " + std::to_string(u.size()) + " and " +
                       std::to_string(v.size()));
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sq += (u[i] - v[i]) * (u[i] - v[i]);
  return alpha_norm_of_length(std::sqrt(sq), alpha);
}

double alpha_norm(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v,
                  double alpha) {
  if (u.size() != v.size()) throw InvalidInput("alpha_norm: length mismatch");
  return alpha_norm_of_length((u - v).norm(), alpha);
}

DistanceMatrix pairwise_distance_matrix(const Matrix& signals, double alpha) {
  check_alpha(alpha);
  Matrix d = pairwise(signals, [alpha](double sq) {
    if (sq == 0.0) return 0.0;
    return (1.0 + alpha) * sq / (std::sqrt(sq) + alpha);
  });
  return {std::move(d), alpha};
}

DistanceMatrix pairwise_squared_distance_matrix(const Matrix& signals) {
  return {pairwise(signals, [](double sq) { return sq; }), 0.0};
}

}  // namespace rgsl
