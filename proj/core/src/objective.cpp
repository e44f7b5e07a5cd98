#include <rgsl/objective.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rgsl {

std::size_t PositiveMask::count() const {
  return static_cast<std::size_t>(values.cast<std::size_t>().sum());
}

PositiveMask update_positive_mask(const Matrix& g, double epsilon) {
  const Index n = g.rows();
  if (g.cols() != n) throw InvalidInput("candidate graph must be square");
  PositiveMask y{MaskMatrix::Zero(n, n), epsilon};
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      const std::uint8_t on = 0.5 * (std::abs(g(i, j)) + std::abs(g(j, i))) >= epsilon ? 1 : 0;
      y.values(i, j) = on;
      y.values(j, i) = on;
    }
  }
  return y;
}

PositiveMask mask_from_matrix(const Matrix& support) {
  const Index n = support.rows();
  if (support.cols() != n) throw InvalidInput("mask support must be square");
  PositiveMask y{(support.array() != 0.0).cast<std::uint8_t>().matrix(), 0.0};
  y.values.diagonal().setZero();
  return y;
}

namespace {

void check_shapes(const Matrix& g, const PositiveMask& y) {
  const Index n = g.rows();
  if (g.cols() != n || y.size() != n) {
    throw InvalidInput("objective: candidate graph and mask must be square and the same size");
  }
  if (n < 2) throw InvalidInput("objective: need at least two nodes");
}

void check_shapes(const Matrix& g, const DistanceMatrix& dist, const PositiveMask& y) {
  check_shapes(g, y);
  if (dist.values.rows() != g.rows() || dist.values.cols() != g.cols()) {
    throw InvalidInput("objective: distance matrix shape does not match candidate graph");
  }
}

// Works on transposed operands so that row i of G is the contiguous column i
// of `gt`. Returns J and, if requested, writes dJ/dG transposed into grad_t.
double regularizer_pass(const Matrix& gt, const MaskMatrix& yt, GradientMode mode,
                        Matrix* grad_t) {
  const Index n = gt.rows();
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    const auto row = gt.col(i);
    const auto pos = yt.col(i);
    double mx = -std::numeric_limits<double>::infinity();
    for (Index p = 0; p < n; ++p) {
      if (p != i) mx = std::max(mx, row(p));
    }
    double sum = 0.0;
    for (Index p = 0; p < n; ++p) {
      if (p != i) sum += std::exp(row(p) - mx);
    }
    const double lse = mx + std::log(sum);

    double positives = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != i && pos(j) != 0) {
        positives += 1.0;
        total += lse - row(j);
      }
    }
    if (grad_t == nullptr) continue;
    auto out = grad_t->col(i);
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool is_pos = pos(j) != 0;
      if (mode == GradientMode::paper && !is_pos) continue;
      out(j) = (is_pos ? -1.0 : 0.0) + positives * std::exp(row(j) - lse);
    }
  }
  return total;
}

}  // namespace

double contrastive_regularizer(const Matrix& g, const PositiveMask& y) {
  check_shapes(g, y);
  const Matrix gt = g.transpose();
  const MaskMatrix yt = y.values.transpose();
  return regularizer_pass(gt, yt, GradientMode::exact, nullptr);
}

double total_objective(const Matrix& g, const DistanceMatrix& dist, const PositiveMask& y,
                       double beta) {
  check_shapes(g, dist, y);
  const double data = dist.values.cwiseProduct(g).sum();
  if (beta == 0.0) return data;
  return data + beta * contrastive_regularizer(g, y);
}

ObjectiveEvaluation evaluate_objective(const Matrix& g, const DistanceMatrix& dist,
                                       const PositiveMask& y, double beta, GradientMode mode) {
  check_shapes(g, dist, y);
  const Index n = g.rows();
  ObjectiveEvaluation out;
  out.gradient = dist.values;
  out.gradient.diagonal().setZero();
  out.loss = dist.values.cwiseProduct(g).sum();
  if (beta == 0.0) return out;

  const Matrix gt = g.transpose();
  const MaskMatrix yt = y.values.transpose();
  Matrix grad_t = Matrix::Zero(n, n);
  out.loss += beta * regularizer_pass(gt, yt, mode, &grad_t);
  out.gradient.noalias() += beta * grad_t.transpose();
  return out;
}

Matrix objective_gradient(const Matrix& g, const DistanceMatrix& dist, const PositiveMask& y,
                          double beta, GradientMode mode) {
  return evaluate_objective(g, dist, y, beta, mode).gradient;
}

}  // namespace rgsl
