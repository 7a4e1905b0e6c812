#include "eqw/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace eqw {

ThresholdGraph build_threshold_graph(const DissimilarityMatrix& d, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  ThresholdGraph g(d.size(), threshold);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d(i, j) <= threshold) g.add_edge(i, j);
  return g;
}

ComplementGraph complement(const AdjacencyGraph& g) {
  ComplementGraph c(g.size(), g.threshold());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) c.add_edge(i, j);
  return c;
}

std::vector<std::size_t> fpf_order(const DissimilarityMatrix& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order;
  order.reserve(n);

  std::size_t first = 0;
  double best_sum = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += d(i, j);
    if (sum > best_sum) {
      best_sum = sum;
      first = i;
    }
  }
  order.push_back(first);

  // dist_to_placed[i] = min over placed j of d(i,j)
  std::vector<double> dist_to_placed(n, std::numeric_limits<double>::infinity());
  std::vector<bool> placed(n, false);
  placed[first] = true;
  for (std::size_t i = 0; i < n; ++i) dist_to_placed[i] = d(i, first);

  while (order.size() < n) {
    std::size_t next = n;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (!placed[i] && dist_to_placed[i] > best) {
        best = dist_to_placed[i];
        next = i;
      }
    order.push_back(next);
    placed[next] = true;
    for (std::size_t i = 0; i < n; ++i)
      dist_to_placed[i] = std::min(dist_to_placed[i], d(i, next));
  }
  return order;
}

std::vector<std::size_t> greedy_independent_set(const AdjacencyGraph& g,
                                                std::span<const std::size_t> order) {
  if (order.size() != g.size())
    throw std::invalid_argument("order must be a permutation of the vertices");
  boost::dynamic_bitset<> chosen(g.size());
  std::vector<std::size_t> result;
  for (std::size_t v : order) {
    if (v >= g.size()) throw std::out_of_range("order contains an invalid vertex");
    if (!g.neighbor_bits(v).intersects(chosen)) {
      chosen.set(v);
      result.push_back(v);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace eqw
