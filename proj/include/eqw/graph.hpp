#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <vector>

#include "eqw/model.hpp"

namespace eqw {

/// Undirected graph over elements 0..n-1, kept both as adjacency bitsets
/// (clique enumeration) and sorted neighbor lists (coloring). Remembers the
/// dissimilarity threshold it was built at.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(std::size_t n, double threshold = 0.0)
      : threshold_(threshold),
        bits_(n, boost::dynamic_bitset<>(n)),
        lists_(n) {}

  std::size_t size() const { return bits_.size(); }
  double threshold() const { return threshold_; }

  void add_edge(std::size_t i, std::size_t j) {
    bits_[i].set(j);
    bits_[j].set(i);
    lists_[i].push_back(j);
    lists_[j].push_back(i);
  }

  bool adjacent(std::size_t i, std::size_t j) const { return bits_[i].test(j); }
  std::size_t degree(std::size_t i) const { return lists_[i].size(); }
  const boost::dynamic_bitset<>& neighbor_bits(std::size_t i) const { return bits_[i]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return lists_[i]; }

 private:
  double threshold_;
  std::vector<boost::dynamic_bitset<>> bits_;
  std::vector<std::vector<std::size_t>> lists_;
};

// Same shape, different role: the threshold graph connects compatible
// elements (d <= T), its complement connects incompatible ones (d > T).
using ThresholdGraph = AdjacencyGraph;
using ComplementGraph = AdjacencyGraph;

/// Edge {i,j} for i != j iff d(i,j) <= threshold.
ThresholdGraph build_threshold_graph(const DissimilarityMatrix& d, double threshold);

/// Complement on the same vertex set, no self-loops.
ComplementGraph complement(const AdjacencyGraph& g);

/// Furthest-point-first ordering: starts from the element maximizing the sum
/// of dissimilarities to all others, then repeatedly appends the unplaced
/// element whose distance to the placed set (min over placed) is largest.
/// Ties by lowest index.
std::vector<std::size_t> fpf_order(const DissimilarityMatrix& d);

/// Scans vertices in `order` and keeps those non-adjacent to every vertex
/// kept so far. The result (sorted ascending) is pairwise incompatible, so
/// its size lower-bounds the minimal cluster count at the graph's threshold.
std::vector<std::size_t> greedy_independent_set(const AdjacencyGraph& g,
                                                std::span<const std::size_t> order);

}  // namespace eqw
