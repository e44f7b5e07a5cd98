#include <rgsl/downstream.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <limits>
#include <random>
#include <string>

namespace rgsl {

namespace {

constexpr double kDegreeFloor = 1e-12;

struct LloydResult {
  std::vector<int> labels;
  double inertia = 0.0;
};

Matrix kmeanspp_centers(const Matrix& x, int k, std::mt19937_64& rng) {
  const Index n = x.rows();
  Matrix centers(k, x.cols());
  std::uniform_int_distribution<Index> pick(0, n - 1);
  centers.row(0) = x.row(pick(rng));
  Vector closest = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = closest.sum();
    Index chosen = 0;
    if (total > 0.0) {
      std::uniform_real_distribution<double> u(0.0, total);
      double target = u(rng);
      chosen = n - 1;
      for (Index i = 0; i < n; ++i) {
        target -= closest(i);
        if (target <= 0.0) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = pick(rng);
    }
    centers.row(c) = x.row(chosen);
    closest = closest.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

LloydResult lloyd(const Matrix& x, Matrix centers, const KMeansOptions& opt) {
  const Index n = x.rows();
  const int k = static_cast<int>(centers.rows());
  LloydResult r;
  r.labels.assign(static_cast<std::size_t>(n), 0);
  Vector dist(n);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    for (Index i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      int arg = 0;
      for (int c = 0; c < k; ++c) {
        const double d = (x.row(i) - centers.row(c)).squaredNorm();
        if (d < best) {
          best = d;
          arg = c;
        }
      }
      r.labels[static_cast<std::size_t>(i)] = arg;
      dist(i) = best;
    }
    Matrix next = Matrix::Zero(k, x.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      const int c = r.labels[static_cast<std::size_t>(i)];
      next.row(c) += x.row(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        next.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
      } else {
        // Empty cluster: move it onto the worst-fit point.
        Index far = 0;
        dist.maxCoeff(&far);
        next.row(c) = x.row(far);
        dist(far) = 0.0;
      }
    }
    const double shift = (next - centers).squaredNorm();
    centers = std::move(next);
    if (shift < opt.tolerance) break;
  }
  r.inertia = 0.0;
  for (Index i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int c = 0; c < k; ++c) {
      const double d = (x.row(i) - centers.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    r.labels[static_cast<std::size_t>(i)] = arg;
    r.inertia += best;
  }
  return r;
}

// Off-diagonal copy of an affinity, validated symmetric and nonnegative.
Matrix offdiagonal_affinity(const Matrix& affinity) {
  const Index n = affinity.rows();
  if (affinity.cols() != n) throw InvalidInput("affinity must be square");
  if (!affinity.allFinite()) throw NumericalError("affinity has non-finite entries");
  Matrix w = affinity;
  w.diagonal().setZero();
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw InvalidInput("affinity must be symmetric");
  }
  if (w.minCoeff() < 0.0) throw InvalidInput("affinity must be nonnegative");
  return w;
}

}  // namespace

ClusterAssignment kmeans(const Matrix& points, int clusters, std::uint64_t seed,
                         const KMeansOptions& options) {
  const Index n = points.rows();
  if (clusters < 1 || clusters > n) {
    throw InvalidInput("kmeans: need 1 <= clusters <= n, got " + std::to_string(clusters) +
                       " for n=" + std::to_string(n));
  }
  ClusterAssignment best;
  best.inertia = std::numeric_limits<double>::infinity();
  best.clusters = clusters;
  best.seed = seed;
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    LloydResult run = lloyd(points, kmeanspp_centers(points, clusters, rng), options);
    if (run.inertia < best.inertia) {
      best.inertia = run.inertia;
      best.labels = std::move(run.labels);
      best.restart = r;
    }
  }
  return best;
}

Matrix spectral_embedding(const Matrix& affinity, int dimensions) {
  const Matrix w = offdiagonal_affinity(affinity);
  const Index n = w.rows();
  if (dimensions < 1 || dimensions > n) throw InvalidInput("embedding dimension out of range");
  const Vector degree = w.rowwise().sum();
  if (degree.maxCoeff() <= 0.0) {
    throw NumericalError("learned graph has no off-diagonal weight; spectral clustering is undefined");
  }
  const Vector inv_sqrt = degree.cwiseMax(kDegreeFloor).cwiseSqrt().cwiseInverse();
  Matrix lap = -(inv_sqrt.asDiagonal() * w * inv_sqrt.asDiagonal());
  lap.diagonal().array() += 1.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(lap);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  Matrix emb = solver.eigenvectors().leftCols(dimensions);
  for (Index i = 0; i < n; ++i) {
    const double norm = emb.row(i).norm();
    if (norm > 0.0) emb.row(i) /= norm;
  }
  return emb;
}

ClusterAssignment spectral_clustering(const Matrix& affinity, int clusters, std::uint64_t seed,
                                      const KMeansOptions& options) {
  const Index n = affinity.rows();
  if (clusters < 2) throw InvalidInput("spectral clustering needs at least 2 clusters");
  if (clusters > n) {
    throw InvalidInput("cluster count " + std::to_string(clusters) + " exceeds node count " +
                       std::to_string(n));
  }
  return kmeans(spectral_embedding(affinity, clusters), clusters, seed, options);
}

Matrix affinity_laplacian(const Matrix& affinity) {
  const Index n = affinity.rows();
  if (affinity.cols() != n) throw InvalidInput("affinity must be square");
  const Vector degree = affinity.rowwise().sum();
  Vector inv_sqrt(n);
  for (Index i = 0; i < n; ++i) inv_sqrt(i) = degree(i) > 0.0 ? 1.0 / std::sqrt(degree(i)) : 0.0;
  Matrix lap = -(inv_sqrt.asDiagonal() * affinity * inv_sqrt.asDiagonal());
  for (Index i = 0; i < n; ++i) lap(i, i) += degree(i) > 0.0 ? 1.0 : 0.0;
  return lap;
}

Matrix label_matrix(std::span<const int> labels, std::span<const std::uint8_t> train_mask,
                    int classes) {
  if (labels.size() != train_mask.size()) throw InvalidInput("labels and train mask differ in length");
  const Index n = static_cast<Index>(labels.size());
  Matrix y = Matrix::Zero(n, classes);
  for (Index i = 0; i < n; ++i) {
    if (!train_mask[static_cast<std::size_t>(i)]) continue;
    const int c = labels[static_cast<std::size_t>(i)];
    if (c < 0 || c >= classes) throw InvalidInput("label " + std::to_string(c) + " out of range");
    y(i, c) = 1.0;
  }
  return y;
}

std::vector<int> argmax_rows(const Matrix& scores) {
  std::vector<int> out(static_cast<std::size_t>(scores.rows()), 0);
  for (Index i = 0; i < scores.rows(); ++i) {
    int best = 0;
    for (Index j = 1; j < scores.cols(); ++j) {
      if (scores(i, j) > scores(i, best)) best = static_cast<int>(j);
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

ClassifierOutput lgc_classify(const Matrix& affinity, std::span<const int> labels,
                              std::span<const std::uint8_t> train_mask, int classes,
                              const LgcOptions& options) {
  if (!(options.gamma > 0.0)) throw InvalidInput("LGC gamma must be > 0");
  const Index n = affinity.rows();
  if (affinity.cols() != n || static_cast<Index>(labels.size()) != n) {
    throw InvalidInput("affinity and labels disagree on node count");
  }
  if (classes < 1) throw InvalidInput("need at least one class");
  const Matrix y = label_matrix(labels, train_mask, classes);
  for (int c = 0; c < classes; ++c) {
    if (y.col(c).sum() == 0.0) {
      std::clog << "warning: class " << c << " has no labeled node in the training set\n";
    }
  }
  Matrix w = affinity;
  if (options.self_loop) w.diagonal().array() += 1.0;
  Matrix system = affinity_laplacian(w);
  system.diagonal().array() += options.gamma;

  ClassifierOutput out;
  out.gamma = options.gamma;
  Eigen::LLT<Matrix> llt(system);
  if (llt.info() != Eigen::Success) throw NumericalError("LGC system is not positive definite");
  out.scores = options.gamma * llt.solve(y);
  out.predictions = argmax_rows(out.scores);
  for (Index i = 0; i < n; ++i) {
    if (out.scores.row(i).cwiseAbs().maxCoeff() == 0.0) ++out.undetermined;
  }
  if (out.undetermined > 0) {
    std::clog << "warning: " << out.undetermined
              << " node(s) received no label mass; predicted as class 0\n";
  }
  return out;
}

}  // namespace rgsl
