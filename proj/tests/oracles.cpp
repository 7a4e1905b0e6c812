#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace eqw::testing {

DissimilarityMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double max_value) {
  std::uniform_real_distribution<double> dist(0.0, max_value);
  DissimilarityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = dist(rng);
      if (v == 0.0) v = max_value;  // keep off-diagonal entries positive
      m.set(i, j, v);
    }
  return m;
}

DissimilarityMatrix from_points_1d(const std::vector<double>& coords) {
  DissimilarityMatrix m(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      m.set(i, j, std::abs(coords[i] - coords[j]));
  return m;
}

DissimilarityMatrix line_instance() { return from_points_1d({0, 1, 2, 10, 11, 20}); }

ThresholdGraph moon_moser_graph(std::size_t m) {
  ThresholdGraph g(3 * m, 1.0);
  for (std::size_t i = 0; i < 3 * m; ++i)
    for (std::size_t j = i + 1; j < 3 * m; ++j)
      if (i / 3 != j / 3) g.add_edge(i, j);
  return g;
}

namespace {

// Depth-first enumeration of set partitions in restricted-growth form,
// assigning each element to an existing block or opening a new one. Blocks
// stay diameter-feasible at every step; `count >= best` prunes.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const DissimilarityMatrix& d, double threshold)
      : d_(d), threshold_(threshold), n_(d.size()) {}

  std::size_t min_count() {
    best_count_ = n_;  // singletons are always feasible
    best_diameter_ = std::numeric_limits<double>::infinity();
    track_diameter_ = false;
    blocks_.clear();
    descend(0, 0.0);
    return best_count_;
  }

  CountDiameter min_count_then_diameter() {
    best_count_ = min_count();
    best_diameter_ = std::numeric_limits<double>::infinity();
    track_diameter_ = true;
    blocks_.clear();
    descend(0, 0.0);
    return {best_count_, best_diameter_};
  }

 private:
  void descend(std::size_t element, double current_diameter) {
    if (track_diameter_) {
      if (blocks_.size() > best_count_ || current_diameter >= best_diameter_) return;
    } else {
      if (blocks_.size() >= best_count_) return;
    }
    if (element == n_) {
      if (track_diameter_) {
        if (blocks_.size() == best_count_) best_diameter_ = current_diameter;
      } else {
        best_count_ = blocks_.size();
      }
      return;
    }

    for (auto& block : blocks_) {
      double widened = current_diameter;
      bool feasible = true;
      for (std::size_t member : block) {
        const double v = d_(member, element);
        if (v > threshold_) {
          feasible = false;
          break;
        }
        widened = std::max(widened, v);
      }
      if (!feasible) continue;
      block.push_back(element);
      descend(element + 1, widened);
      block.pop_back();
    }

    blocks_.push_back({element});
    descend(element + 1, current_diameter);
    blocks_.pop_back();
  }

  const DissimilarityMatrix& d_;
  double threshold_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t best_count_ = 0;
  double best_diameter_ = 0.0;
  bool track_diameter_ = false;
};

}  // namespace

std::size_t min_diameter_partition_bruteforce(const DissimilarityMatrix& d, double threshold) {
  return PartitionEnumerator(d, threshold).min_count();
}

std::size_t min_diameter_partition_dp(const DissimilarityMatrix& d, double threshold) {
  const std::size_t n = d.size();
  if (n > 20) throw std::invalid_argument("subset DP limited to n <= 20");
  const std::uint32_t full = (n == 32 ? 0xffffffffu : (1u << n) - 1);

  std::vector<bool> homogeneous(full + 1, true);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    for (std::size_t i = 0; i < n && homogeneous[mask]; ++i) {
      if (!(mask & (1u << i))) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask & (1u << j)) && d(i, j) > threshold) {
          homogeneous[mask] = false;
          break;
        }
    }

  std::vector<std::size_t> cost(full + 1, n + 1);
  cost[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);  // isolate the lowest element
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !homogeneous[sub]) continue;
      cost[mask] = std::min(cost[mask], cost[mask ^ sub] + 1);
    }
  }
  return cost[full];
}

CountDiameter best_count_then_diameter(const DissimilarityMatrix& d, double threshold) {
  return PartitionEnumerator(d, threshold).min_count_then_diameter();
}

std::size_t min_dominating_set_bruteforce(const AdjacencyGraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("dominating set oracle limited to n <= 20");
  std::vector<std::uint32_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (std::size_t u : g.neighbors(v)) closed[v] |= 1u << u;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::size_t best = n;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t dominated = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) dominated |= closed[v];
    if (dominated == full)
      best = std::min(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

std::set<std::vector<std::size_t>> maximal_homogeneous_sets_bruteforce(
    const DissimilarityMatrix& d, const WidthConstraint& c) {
  const std::size_t n = d.size();
  if (n > 20) throw std::invalid_argument("subset enumeration limited to n <= 20");

  auto is_homogeneous = [&](std::uint32_t mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    return width_of(members, d, c.kind) <= c.threshold;
  };

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> homogeneous;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    if (is_homogeneous(mask)) homogeneous.push_back(mask);

  std::set<std::vector<std::size_t>> maximal;
  for (std::uint32_t mask : homogeneous) {
    bool is_maximal = true;
    for (std::uint32_t other : homogeneous)
      if (other != mask && (mask & other) == mask) {
        is_maximal = false;
        break;
      }
    if (!is_maximal) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    maximal.insert(std::move(members));
  }
  return maximal;
}

std::size_t min_cover_bruteforce(const HomogeneousSetCollection& c) {
  const std::size_t m = c.sets.size();
  if (m > 22) throw std::invalid_argument("cover oracle limited to 22 sets");
  std::vector<std::uint32_t> masks(m, 0);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t e : c.sets[s].members) masks[s] |= 1u << e;
  const std::uint32_t universe = (1u << c.universe_size) - 1;

  std::size_t best = m + 1;
  for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
    std::uint32_t covered = 0;
    for (std::size_t s = 0; s < m; ++s)
      if (pick & (1u << s)) covered |= masks[s];
    if (covered == universe)
      best = std::min(best, static_cast<std::size_t>(__builtin_popcount(pick)));
  }
  if (best > m) throw std::runtime_error("collection does not cover the universe");
  return best;
}

namespace {

bool colorable_with(const AdjacencyGraph& g, std::size_t k, std::size_t v,
                    std::vector<std::size_t>& colors) {
  if (v == g.size()) return true;
  for (std::size_t c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t u : g.neighbors(v))
      if (u < v && colors[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (colorable_with(g, k, v + 1, colors)) return true;
  }
  return false;
}

}  // namespace

std::size_t chromatic_number_bruteforce(const AdjacencyGraph& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    std::vector<std::size_t> colors(g.size(), 0);
    if (colorable_with(g, k, 0, colors)) return k;
  }
  return g.size();
}

double dtw_naive(const std::vector<double>& a, const std::vector<double>& b) {
  std::map<std::pair<std::size_t, std::size_t>, double> memo;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> double {
    if (i == 0 && j == 0) return std::abs(a[0] - b[0]);
    if (i == 0 && j > 0) return std::abs(a[0] - b[j]) + self(self, 0, j - 1);
    if (j == 0) return std::abs(a[i] - b[0]) + self(self, i - 1, 0);
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double best = std::min({self(self, i - 1, j - 1), self(self, i - 1, j),
                                  self(self, i, j - 1)});
    const double value = std::abs(a[i] - b[j]) + best;
    memo[key] = value;
    return value;
  };
  return rec(rec, a.size() - 1, b.size() - 1);
}

double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

}  // namespace eqw::testing
