#include <rgsl/metrics.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace rgsl {
namespace {

using Ids = std::vector<int>;

Ids random_ids(std::size_t n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, k - 1);
  Ids out(n);
  for (int& v : out) v = d(rng);
  return out;
}

TEST(Hungarian, SmallCostMatrix) {
  Matrix cost(3, 3);
  cost << 4, 1, 3, 2, 0, 5, 3, 2, 2;
  std::vector<Index> a = hungarian_min_cost(cost);
  double total = 0.0;
  for (Index r = 0; r < 3; ++r) total += cost(r, a[r]);
  EXPECT_EQ(total, 5.0);
}

TEST(ClusteringAccuracy, Examples) {
  EXPECT_DOUBLE_EQ(clustering_accuracy(Ids{0, 0, 1, 1}, Ids{1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(clustering_accuracy(Ids{0, 1, 0, 1}, Ids{0, 0, 1, 1}), 0.5);
  EXPECT_DOUBLE_EQ(clustering_accuracy(Ids{2, 0, 1}, Ids{2, 0, 1}), 1.0);
}

TEST(ClusteringAccuracy, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int kp = 2 + static_cast<int>(seed % 5);
    const int kt = 2 + static_cast<int>((seed / 2) % 5);
    Ids pred = random_ids(40, kp, seed);
    Ids truth = random_ids(40, kt, seed + 100);
    EXPECT_NEAR(clustering_accuracy(pred, truth), oracle::permutation_accuracy(pred, truth),
                1e-15)
        << "seed " << seed;
  }
}

TEST(ClusteringAccuracy, InvariantUnderRelabeling) {
  Ids pred = random_ids(50, 4, 1);
  Ids truth = random_ids(50, 4, 2);
  const std::vector<int> perm{3, 1, 0, 2};
  Ids relabeled = pred;
  for (int& v : relabeled) v = perm[v];
  EXPECT_DOUBLE_EQ(clustering_accuracy(relabeled, truth), clustering_accuracy(pred, truth));
  EXPECT_DOUBLE_EQ(macro_f1(relabeled, truth), macro_f1(pred, truth));
}

TEST(ClusteringAccuracy, RandomAtLeastChance) {
  for (int c : {2, 3, 5}) {
    Ids truth = random_ids(1000, c, 10 + c);
    Ids pred = random_ids(1000, c, 20 + c);
    EXPECT_GE(clustering_accuracy(pred, truth), 1.0 / c);
  }
}

TEST(ClusteringAccuracy, LengthMismatchThrows) {
  EXPECT_THROW(clustering_accuracy(Ids{0, 1}, Ids{0}), InvalidInput);
}

TEST(Nmi, Examples) {
  EXPECT_NEAR(nmi(Ids{0, 0, 1, 1, 2}, Ids{1, 1, 2, 2, 0}), 1.0, 1e-12);
  EXPECT_EQ(nmi(Ids{0, 0, 0, 0}, Ids{0, 0, 1, 1}), 0.0);
  EXPECT_NEAR(nmi(Ids{0, 0, 1, 1}, Ids{0, 1, 0, 1}), 0.0, 1e-15);
  EXPECT_EQ(nmi(Ids{3, 3}, Ids{1, 1}), 1.0);
}

TEST(Nmi, HandComputedValue) {
  // Joint table of pred {0,0,1} against truth {0,1,1}; both marginals have entropy h.
  const Ids pred{0, 0, 1};
  const Ids truth{0, 1, 1};
  const double h = -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3);
  const double mi = (1.0 / 3) * std::log((1.0 / 3) / (2.0 / 9)) * 2 +
                    (1.0 / 3) * std::log((1.0 / 3) / (4.0 / 9));
  EXPECT_NEAR(nmi(pred, truth), mi / h, 1e-14);
}

TEST(Nmi, Symmetric) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Ids a = random_ids(60, 3, seed);
    Ids b = random_ids(60, 4, seed + 50);
    EXPECT_NEAR(nmi(a, b), nmi(b, a), 1e-15);
    EXPECT_GE(nmi(a, b), 0.0);
    EXPECT_LE(nmi(a, b), 1.0);
  }
}

TEST(MacroF1, Examples) {
  EXPECT_DOUBLE_EQ(macro_f1(Ids{0, 1, 2}, Ids{0, 1, 2}), 1.0);
  // class 0: P = 2/3, R = 1, F1 = 0.8; class 1: P = 1, R = 1/2, F1 = 2/3.
  EXPECT_NEAR(macro_f1(Ids{0, 0, 0, 1}, Ids{0, 0, 1, 1}), (0.8 + 2.0 / 3.0) / 2.0, 1e-15);
}

TEST(MacroF1, UnpredictedClassContributesZero) {
  // Only one cluster: class 1 is never predicted after mapping.
  EXPECT_NEAR(macro_f1(Ids{0, 0, 0, 0}, Ids{0, 0, 1, 1}), (2.0 / 3.0 + 0.0) / 2.0, 1e-15);
}

TEST(ClassificationAccuracy, Examples) {
  std::vector<std::uint8_t> all{1, 1, 1, 1};
  EXPECT_EQ(classification_accuracy(Ids{0, 1, 2, 0}, Ids{0, 1, 2, 0}, all), 1.0);
  EXPECT_EQ(classification_accuracy(Ids{1, 0, 0, 1}, Ids{0, 1, 2, 0}, all), 0.0);
  EXPECT_EQ(classification_accuracy(Ids{0, 1, 0, 1}, Ids{0, 1, 2, 0}, all), 0.5);
  std::vector<std::uint8_t> half{1, 0, 0, 1};
  EXPECT_EQ(classification_accuracy(Ids{0, 1, 0, 1}, Ids{0, 1, 2, 0}, half), 0.5);
  std::vector<std::uint8_t> none{0, 0, 0, 0};
  EXPECT_THROW(classification_accuracy(Ids{0, 1, 0, 1}, Ids{0, 1, 2, 0}, none), InvalidInput);
}

TEST(Summarize, PopulationStd) {
  std::vector<double> v{1.0, 3.0};
  Summary s = summarize(v);
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.std, 1.0);
}

}  // namespace
}  // namespace rgsl
