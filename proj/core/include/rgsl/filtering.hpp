#pragma once

#include <rgsl/graph.hpp>

namespace rgsl {

/// Output of the high-pass filter S = (L/2)^k X.
struct FilteredFeatures {
  Matrix values;
  int order = 0;
};

/// Applies (L/2) to X `order` times using the dense Laplacian.
/// order == 0 returns X unchanged. Throws InvalidInput on negative order or
/// a row-count mismatch.
FilteredFeatures high_pass_filter(const Matrix& features, const LaplacianMatrix& laplacian,
                                  int order);

/// Same filter using the sparse Laplacian of `g`; cost O(order * (|E| + n) * d).
FilteredFeatures high_pass_filter(const Graph& g, int order);

/// Scales each nonzero row of X to unit Euclidean norm.
Matrix row_normalize(const Matrix& features);

}  // namespace rgsl
