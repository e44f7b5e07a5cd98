#include <rgsl/filtering.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace rgsl {
namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(HighPassFilter, OrderZeroIsIdentity) {
  Graph g = fixture::random_graph(10, 0.3, 3, 1);
  EXPECT_EQ(high_pass_filter(g.features(), normalized_laplacian(g), 0).values, g.features());
  EXPECT_EQ(high_pass_filter(g, 0).values, g.features());
}

TEST(HighPassFilter, TwoNodeHandProduct) {
  Graph g = build_graph(std::vector<Edge>{{0, 1}}, Matrix::Identity(2, 2));
  Matrix expected(2, 2);
  expected << 0.25, -0.25, -0.25, 0.25;
  FilteredFeatures s = high_pass_filter(g.features(), normalized_laplacian(g), 1);
  EXPECT_EQ(s.order, 1);
  EXPECT_LT(max_abs(s.values - expected), 1e-15);
}

TEST(HighPassFilter, OrderTwoIsOrderOneTwice) {
  Graph g = fixture::random_graph(20, 0.2, 4, 2);
  LaplacianMatrix l = normalized_laplacian(g);
  Matrix once = high_pass_filter(g.features(), l, 1).values;
  Matrix twice = high_pass_filter(once, l, 1).values;
  EXPECT_LT(max_abs(high_pass_filter(g.features(), l, 2).values - twice), 1e-12);
}

TEST(HighPassFilter, MatchesSpectralDefinition) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (int k : {1, 2, 5, 17}) {
      Graph g = fixture::random_graph(30, 0.15, 3, seed);
      LaplacianMatrix l = normalized_laplacian(g);
      Matrix expected = oracle::spectral_filter(l.values, g.features(), k);
      EXPECT_LT(max_abs(high_pass_filter(g.features(), l, k).values - expected), 1e-8);
      EXPECT_LT(max_abs(high_pass_filter(g, k).values - expected), 1e-8);
    }
  }
}

TEST(HighPassFilter, AnnihilatesConstantsOnRegularGraphs) {
  for (Index n : {5, 8, 13}) {
    Graph g = fixture::cycle_graph(n);
    for (int k : {1, 3, 6}) {
      EXPECT_LT(max_abs(high_pass_filter(g, k).values), 1e-10);
    }
  }
  Graph k5 = fixture::complete_graph(5);
  EXPECT_LT(max_abs(high_pass_filter(k5, 2).values), 1e-10);
}

TEST(HighPassFilter, NormNonIncreasingInOrder) {
  Graph g = fixture::random_graph(30, 0.2, 5, 9);
  LaplacianMatrix l = normalized_laplacian(g);
  double prev = g.features().norm();
  for (int k = 1; k <= 10; ++k) {
    const double cur = high_pass_filter(g.features(), l, k).values.norm();
    EXPECT_LE(cur, prev + 1e-12);
    prev = cur;
  }
}

TEST(HighPassFilter, RejectsBadInput) {
  Graph g = fixture::random_graph(6, 0.5, 2, 1);
  EXPECT_THROW(high_pass_filter(g, -1), InvalidInput);
  EXPECT_THROW(high_pass_filter(Matrix::Zero(5, 2), normalized_laplacian(g), 1), InvalidInput);
}

TEST(RowNormalize, UnitRowsAndZeroRowsKept) {
  Matrix x(3, 2);
  x << 3, 4, 0, 0, 1, 0;
  Matrix y = row_normalize(x);
  EXPECT_NEAR(y.row(0).norm(), 1.0, 1e-15);
  EXPECT_EQ(y.row(1).norm(), 0.0);
  EXPECT_EQ(y(2, 0), 1.0);
}

}  // namespace
}  // namespace rgsl
