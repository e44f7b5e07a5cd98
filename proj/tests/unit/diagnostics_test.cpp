#include <rgsl/diagnostics.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace rgsl {
namespace {

TEST(Homophily, TriangleSameLabel) {
  Graph g = build_graph(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}, Matrix::Zero(3, 1),
                        std::vector<int>{4, 4, 4});
  EXPECT_DOUBLE_EQ(homophily(g), 1.0);
}

TEST(Homophily, BipartiteIsZero) {
  Graph g = build_graph(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, Matrix::Zero(4, 1),
                        std::vector<int>{0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(homophily(g), 0.0);
}

TEST(Homophily, IsolatedNodesCountAsZero) {
  Graph g = build_graph(std::vector<Edge>{{0, 1}}, Matrix::Zero(4, 1),
                        std::vector<int>{0, 0, 0, 0});
  EXPECT_DOUBLE_EQ(homophily(g), 0.5);
}

TEST(Homophily, HandComputedStar) {
  // Center 0 (label 0) with leaves labeled 0, 1, 1: center 1/3, leaf 1 -> 1.
  Graph g = build_graph(std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}, Matrix::Zero(4, 1),
                        std::vector<int>{0, 0, 1, 1});
  EXPECT_NEAR(homophily(g), (1.0 / 3.0 + 1.0) / 4.0, 1e-15);
}

TEST(Homophily, InvariantUnderClassRelabeling) {
  fixture::HeterophilicSpec spec;
  spec.nodes = 60;
  spec.classes = 4;
  Graph g = fixture::heterophilic_graph(spec);
  const std::vector<int> perm{2, 0, 3, 1};
  std::vector<int> relabeled = g.labels();
  for (int& y : relabeled) y = perm[y];
  Graph h = build_graph(g.edges(), g.features(), relabeled);
  EXPECT_DOUBLE_EQ(homophily(g), homophily(h));
}

TEST(Homophily, SupportMatchesGraphForm) {
  Graph g = fixture::heterophilic_graph({});
  EXPECT_NEAR(support_homophily(g.dense_adjacency(), g.labels()), homophily(g), 1e-15);
}

TEST(Homophily, RequiresLabels) {
  EXPECT_THROW(homophily(fixture::path_graph(3)), InvalidInput);
}

TEST(Sparsity, CompleteAndEmpty) {
  EXPECT_NEAR(sparsity(fixture::complete_graph(3)), 6.0 / 9.0, 1e-15);
  EXPECT_EQ(sparsity(build_graph(std::vector<Edge>{}, Matrix::Zero(5, 1))), 0.0);
}

TEST(DirichletEnergy, ConstantSignalEdgeSumIsZero) {
  Graph g = fixture::random_graph(15, 0.3, 1, 3);
  Matrix s = Matrix::Constant(15, 3, 2.5);
  EXPECT_EQ(dirichlet_energy_edge_sum(s, g), 0.0);
}

TEST(DirichletEnergy, SingleEdgeEdgeSum) {
  Graph g = build_graph(std::vector<Edge>{{0, 1}}, Matrix::Zero(2, 1));
  Matrix s(2, 1);
  s << 1.0, 0.0;
  EXPECT_DOUBLE_EQ(dirichlet_energy_edge_sum(s, g), 1.0);
}

TEST(DirichletEnergy, AllOnesMatchesDenseOracle) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Graph g = fixture::random_graph(20, 0.25, 1, seed);
    Matrix ones = Matrix::Ones(20, 1);
    Matrix l = oracle::self_loop_laplacian(g.dense_adjacency());
    const double expected = (ones.transpose() * l * ones)(0, 0);
    EXPECT_NEAR(dirichlet_energy(ones, g), expected, 1e-12);
  }
}

TEST(DirichletEnergy, TraceFormMatchesDenseOracle) {
  Graph g = fixture::random_graph(25, 0.2, 4, 11);
  Matrix l = oracle::self_loop_laplacian(g.dense_adjacency());
  const double expected = (g.features().transpose() * l * g.features()).trace();
  EXPECT_NEAR(dirichlet_energy(g.features(), g), expected, 1e-10);
}

TEST(DirichletEnergy, NodeSharesSumToTrace) {
  Graph g = fixture::random_graph(25, 0.2, 4, 12);
  Vector per_node = node_dirichlet_energy(g.features(), g);
  EXPECT_NEAR(per_node.sum(), dirichlet_energy(g.features(), g), 1e-10);
  EXPECT_GE(per_node.minCoeff(), 0.0);
}

TEST(Outliers, RegularGraphHasNone) {
  // 3-regular: the cube graph.
  std::vector<Edge> cube{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                         {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  Graph g = build_graph(cube, fixture::random_matrix(8, 2, 1));
  EXPECT_TRUE(degree_outliers(g).empty());
  EXPECT_EQ(outlier_energy_ratio(g, g.features()).count, 0u);
}

TEST(Outliers, LeavesAndHubsFlagged) {
  // Star with 10 leaves plus a 4-cycle: the hub and every leaf are outliers.
  std::vector<Edge> edges;
  for (Index i = 1; i <= 10; ++i) edges.emplace_back(0, i);
  edges.insert(edges.end(), {{11, 12}, {12, 13}, {13, 14}, {14, 11}});
  Graph g = build_graph(edges, fixture::random_matrix(15, 2, 2));
  std::vector<Index> flagged = degree_outliers(g);
  EXPECT_EQ(flagged.size(), 11u);
  EXPECT_EQ(flagged.front(), 0);
  OutlierEnergy r = outlier_energy_ratio(g, g.features());
  EXPECT_EQ(r.count, 11u);
  Vector per_node = node_dirichlet_energy(g.features(), g);
  double share = 0.0;
  for (Index i : flagged) share += per_node(i);
  EXPECT_NEAR(r.ratio, share / per_node.sum() / 11.0, 1e-14);
}

TEST(Diagnose, ReportFields) {
  Graph g = fixture::two_triangles();
  DiagnosticsReport r = diagnose(g);
  EXPECT_DOUBLE_EQ(r.homophily, 1.0);
  EXPECT_NEAR(r.sparsity, 12.0 / 36.0, 1e-15);
  EXPECT_GT(r.dirichlet_energy, 0.0);
  EXPECT_EQ(r.outlier_count, 0u);
}

}  // namespace
}  // namespace rgsl
