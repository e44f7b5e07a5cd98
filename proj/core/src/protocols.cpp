#include <rgsl/protocols.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace rgsl {

Graph perturb_edges(const Graph& g, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw InvalidInput("random edge rate must lie in [0, 1], got " + std::to_string(rate));
  }
  const auto& original = g.edges();
  const std::size_t m = static_cast<std::size_t>(std::floor(rate * static_cast<double>(original.size())));
  if (m == 0) return g;

  const Index n = g.num_nodes();
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (pairs - original.size() < m) {
    throw InvalidInput("graph has " + std::to_string(pairs - original.size()) +
                       " absent pairs, cannot add " + std::to_string(m));
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(original.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> removed(original.size(), 0);
  for (std::size_t r = 0; r < m; ++r) removed[order[r]] = 1;

  std::vector<Edge> edges;
  edges.reserve(original.size());
  for (std::size_t e = 0; e < original.size(); ++e) {
    if (!removed[e]) edges.push_back(original[e]);
  }

  std::set<Edge> added;
  std::uniform_int_distribution<Index> node(0, n - 1);
  while (added.size() < m) {
    Index a = node(rng);
    Index b = node(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (g.has_edge(a, b)) continue;
    added.emplace(a, b);
  }
  edges.insert(edges.end(), added.begin(), added.end());
  return g.with_edges(std::move(edges));
}

namespace {

std::vector<std::uint8_t> membership(const std::vector<Index>& ids, Index n) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
  for (Index i : ids) mask[static_cast<std::size_t>(i)] = 1;
  return mask;
}

}  // namespace

std::vector<std::uint8_t> SplitSpec::train_mask(Index n) const { return membership(train, n); }
std::vector<std::uint8_t> SplitSpec::val_mask(Index n) const { return membership(val, n); }
std::vector<std::uint8_t> SplitSpec::test_mask(Index n) const { return membership(test, n); }

SplitSpec dense_split(Index n, std::uint64_t seed) {
  if (n < 5) throw InvalidInput("dense split needs at least 5 nodes, got " + std::to_string(n));
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto n_train = static_cast<std::size_t>(n * 60 / 100);
  const auto n_val = static_cast<std::size_t>(n * 20 / 100);
  SplitSpec s;
  s.seed = seed;
  s.train.assign(perm.begin(), perm.begin() + n_train);
  s.val.assign(perm.begin() + n_train, perm.begin() + n_train + n_val);
  s.test.assign(perm.begin() + n_train + n_val, perm.end());
  return s;
}

}  // namespace rgsl
