#include <rgsl/filtering.hpp>

#include <string>

namespace rgsl {

namespace {

void check_order(int order) {
  if (order < 0) throw InvalidInput("filter order must be nonnegative, got " + std::to_string(order));
}

}  // namespace

FilteredFeatures high_pass_filter(const Matrix& features, const LaplacianMatrix& laplacian,
                                  int order) {
  check_order(order);
  const Matrix& l = laplacian.values;
  if (l.rows() != l.cols() || l.cols() != features.rows()) {
    throw InvalidInput("Laplacian is " + std::to_string(l.rows()) + "x" + std::to_string(l.cols()) +
                       " but features have " + std::to_string(features.rows()) + " rows");
  }
  Matrix s = features;
  const Matrix half = 0.5 * l;
  for (int step = 0; step < order; ++step) s = half * s;
  return {std::move(s), order};
}

FilteredFeatures high_pass_filter(const Graph& g, int order) {
  check_order(order);
  Matrix s = g.features();
  if (order == 0) return {std::move(s), 0};
  const Eigen::SparseMatrix<double> half = 0.5 * sparse_normalized_laplacian(g);
  for (int step = 0; step < order; ++step) s = half * s;
  return {std::move(s), order};
}

Matrix row_normalize(const Matrix& features) {
  Matrix out = features;
  for (Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    if (norm > 0.0) out.row(i) /= norm;
  }
  return out;
}

}  // namespace rgsl
