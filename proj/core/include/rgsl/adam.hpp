#pragma once

#include <rgsl/common.hpp>

namespace rgsl {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias-corrected moments over a dense parameter matrix.
class AdamOptimizer {
 public:
  AdamOptimizer(Index rows, Index cols, AdamConfig config = {});

  /// params <- params - lr * m_hat / (sqrt(v_hat) + eps). Throws
  /// InvalidInput on shape mismatch.
  void step(Matrix& params, const Matrix& grad, double lr);

  long steps() const { return t_; }
  const Matrix& first_moment() const { return m_; }
  const Matrix& second_moment() const { return v_; }
  const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
  Matrix m_;
  Matrix v_;
  long t_ = 0;
};

}  // namespace rgsl
