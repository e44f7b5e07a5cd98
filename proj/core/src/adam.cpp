#include <rgsl/adam.hpp>

#include <cmath>

namespace rgsl {

AdamOptimizer::AdamOptimizer(Index rows, Index cols, AdamConfig config)
    : config_(config), m_(Matrix::Zero(rows, cols)), v_(Matrix::Zero(rows, cols)) {}

void AdamOptimizer::step(Matrix& params, const Matrix& grad, double lr) {
  if (params.rows() != m_.rows() || params.cols() != m_.cols() || grad.rows() != m_.rows() ||
      grad.cols() != m_.cols()) {
    throw InvalidInput("Adam: parameter/gradient shape does not match optimizer state");
  }
  ++t_;
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  m_.array() = b1 * m_.array() + (1.0 - b1) * grad.array();
  v_.array() = b2 * v_.array() + (1.0 - b2) * grad.array().square();
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
  params.array() -= lr * (m_.array() / c1) / ((v_.array() / c2).sqrt() + config_.epsilon);
}

}  // namespace rgsl
