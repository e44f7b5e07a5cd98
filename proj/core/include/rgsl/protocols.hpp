#pragma once

#include <rgsl/graph.hpp>

#include <cstdint>
#include <vector>

namespace rgsl {

/// Replaces floor(rate * |E|) uniformly chosen edges with the same number of
/// uniformly chosen pairs absent from the original graph. Node count and
/// edge count are preserved. Throws InvalidInput for rate outside [0, 1] or
/// when too few absent pairs exist.
Graph perturb_edges(const Graph& g, double rate, std::uint64_t seed);

struct SplitSpec {
  std::vector<Index> train;
  std::vector<Index> val;
  std::vector<Index> test;
  std::uint64_t seed = 0;

  /// 0/1 membership vectors of length n.
  std::vector<std::uint8_t> train_mask(Index n) const;
  std::vector<std::uint8_t> val_mask(Index n) const;
  std::vector<std::uint8_t> test_mask(Index n) const;
};

/// Random 60/20/20 split: train gets n*60/100 nodes, validation n*20/100,
/// test the rest. Throws InvalidInput for n < 5.
SplitSpec dense_split(Index n, std::uint64_t seed);

}  // namespace rgsl
