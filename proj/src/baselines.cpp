#include "eqw/baselines.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "eqw/assign.hpp"

namespace eqw {

namespace {

constexpr std::size_t kNoColor = std::numeric_limits<std::size_t>::max();

Partition hac_engine(const DissimilarityMatrix& d, double threshold, Dendrogram* dendrogram) {
  const std::size_t n = d.size();
  std::vector<bool> alive(n, true);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  // Full complete-link distance table, updated with the Lance-Williams max
  // rule. Cluster ids are the smallest member (merges keep the lower id).
  std::vector<double> cl(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cl[i * n + j] = d(i, j);

  while (true) {
    std::size_t best_i = n, best_j = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[j] && cl[i * n + j] < best) {
          best = cl[i * n + j];
          best_i = i;
          best_j = j;
        }
    }
    if (best_i == n || best > threshold) break;

    if (dendrogram) dendrogram->merges.push_back({best_i, best_j, best});
    members[best_i].insert(members[best_i].end(), members[best_j].begin(),
                           members[best_j].end());
    members[best_j].clear();
    alive[best_j] = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!alive[u] || u == best_i) continue;
      const double merged = std::max(cl[best_i * n + u], cl[best_j * n + u]);
      cl[best_i * n + u] = merged;
      cl[u * n + best_i] = merged;
    }
  }

  Partition p;
  p.labels.assign(n, 0);
  p.k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    for (std::size_t e : members[i]) p.labels[e] = p.k;
    ++p.k;
  }
  return p;
}

}  // namespace

Partition hac_complete_link(const DissimilarityMatrix& d, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  return hac_engine(d, threshold, nullptr);
}

Dendrogram complete_link_dendrogram(const DissimilarityMatrix& d) {
  Dendrogram dendrogram;
  hac_engine(d, std::numeric_limits<double>::infinity(), &dendrogram);
  return dendrogram;
}

Coloring dsatur_heuristic(const ComplementGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> color(n, kNoColor);
  std::vector<boost::dynamic_bitset<>> neighbor_colors(n, boost::dynamic_bitset<>(n));
  Coloring result;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != kNoColor) continue;
      if (pick == n) {
        pick = v;
        continue;
      }
      const std::size_t sat_v = neighbor_colors[v].count();
      const std::size_t sat_p = neighbor_colors[pick].count();
      if (sat_v > sat_p || (sat_v == sat_p && g.degree(v) > g.degree(pick))) pick = v;
    }

    std::size_t c = 0;
    while (neighbor_colors[pick].test(c)) ++c;
    color[pick] = c;
    result.k = std::max(result.k, c + 1);
    for (std::size_t u : g.neighbors(pick)) neighbor_colors[u].set(c);
  }

  result.colors = std::move(color);
  return result;
}

namespace {

// DSATUR-guided branch and bound. Vertices of the seed clique are fixed to
// distinct colors up front, and any branch may open at most one new color,
// which removes color-class symmetry.
class ColoringSearch {
 public:
  ColoringSearch(const AdjacencyGraph& g, Deadline deadline, std::size_t color_budget)
      : g_(g),
        deadline_(deadline),
        n_(g.size()),
        budget_(std::min(color_budget, g.size())),
        color_(g.size(), kNoColor),
        adjacent_count_(g.size(), std::vector<std::uint32_t>(budget_, 0)),
        saturation_(g.size(), 0) {}

  // Searches for colorings strictly better than `incumbent_k`; `target`
  // aborts as soon as a coloring with at most that many colors is found.
  void run(std::span<const std::size_t> seed_clique, std::size_t incumbent_k,
           std::size_t target) {
    best_k_ = incumbent_k;
    target_ = target;
    if (seed_clique.size() > budget_ || seed_clique.size() >= incumbent_k)
      return;  // the clique alone rules out any improvement
    std::size_t used = 0;
    for (std::size_t v : seed_clique) assign(v, used++);
    descend(used, used);
  }

  bool found() const { return !best_colors_.empty(); }
  Coloring best() const { return {best_colors_, best_k_}; }
  bool timed_out() const { return timed_out_; }

 private:
  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    for (std::size_t u : g_.neighbors(v))
      if (adjacent_count_[u][c]++ == 0) ++saturation_[u];
  }

  void unassign(std::size_t v, std::size_t c) {
    color_[v] = kNoColor;
    for (std::size_t u : g_.neighbors(v))
      if (--adjacent_count_[u][c] == 0) --saturation_[u];
  }

  bool stop_now() {
    if (timed_out_ || done_) return true;
    if ((++tick_ & 1023u) == 0 && deadline_.expired()) timed_out_ = true;
    return timed_out_;
  }

  void descend(std::size_t colored, std::size_t used) {
    if (stop_now() || used >= best_k_) return;
    if (colored == n_) {
      best_k_ = used;
      best_colors_ = color_;
      if (best_k_ <= target_) done_ = true;
      return;
    }

    // Most saturated uncolored vertex, ties by degree then index.
    std::size_t v = n_;
    for (std::size_t u = 0; u < n_; ++u) {
      if (color_[u] != kNoColor) continue;
      if (v == n_ || saturation_[u] > saturation_[v] ||
          (saturation_[u] == saturation_[v] && g_.degree(u) > g_.degree(v)))
        v = u;
    }

    for (std::size_t c = 0; c < used; ++c) {
      if (adjacent_count_[v][c] != 0) continue;
      assign(v, c);
      descend(colored + 1, used);
      unassign(v, c);
      if (timed_out_ || done_) return;
      if (used >= best_k_) return;  // incumbent improved below us
    }
    if (used + 1 < best_k_ && used < budget_) {
      assign(v, used);
      descend(colored + 1, used + 1);
      unassign(v, used);
    }
  }

  const AdjacencyGraph& g_;
  Deadline deadline_;
  std::size_t n_;
  std::size_t budget_;
  std::vector<std::size_t> color_;
  std::vector<std::vector<std::uint32_t>> adjacent_count_;
  std::vector<std::size_t> saturation_;

  std::size_t best_k_ = 0;
  std::size_t target_ = 0;
  std::vector<std::size_t> best_colors_;
  bool timed_out_ = false;
  bool done_ = false;
  std::uint64_t tick_ = 0;
};

std::vector<std::size_t> greedy_clique(const AdjacencyGraph& g) {
  // Fallback lower-bound clique: scan by descending degree.
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    const bool compatible = std::all_of(clique.begin(), clique.end(),
                                        [&](std::size_t u) { return g.adjacent(u, v); });
    if (compatible) clique.push_back(v);
  }
  return clique;
}

void check_clique(const AdjacencyGraph& g, std::span<const std::size_t> clique) {
  for (std::size_t a = 0; a < clique.size(); ++a) {
    if (clique[a] >= g.size()) throw std::invalid_argument("seed clique vertex out of range");
    for (std::size_t b = a + 1; b < clique.size(); ++b)
      if (!g.adjacent(clique[a], clique[b]))
        throw std::invalid_argument("seed clique is not pairwise adjacent");
  }
}

}  // namespace

ColoringResult exact_coloring(const ComplementGraph& g, Deadline deadline,
                              std::span<const std::size_t> seed_clique) {
  std::vector<std::size_t> clique(seed_clique.begin(), seed_clique.end());
  if (clique.empty())
    clique = greedy_clique(g);
  else
    check_clique(g, clique);

  const Coloring heuristic = dsatur_heuristic(g);
  if (heuristic.k <= clique.size()) return {heuristic, true};

  ColoringSearch search(g, deadline, heuristic.k - 1);
  search.run(clique, heuristic.k, clique.size());
  if (!search.found()) return {heuristic, !search.timed_out()};
  return {search.best(), !search.timed_out()};
}

namespace {

struct ProbeOutcome {
  std::optional<Coloring> coloring;
  bool certain = true;  // false when the deadline hit before an answer
};

// Decision probe: is the complement of the threshold graph at `threshold`
// colorable with at most `k` colors?
ProbeOutcome probe_k_colorable(const DissimilarityMatrix& d, double threshold, std::size_t k,
                               std::span<const std::size_t> order, Deadline deadline) {
  const ThresholdGraph g = build_threshold_graph(d, threshold);
  const ComplementGraph gc = complement(g);
  const auto clique = greedy_independent_set(g, order);
  if (clique.size() > k) return {std::nullopt, true};

  const Coloring heuristic = dsatur_heuristic(gc);
  if (heuristic.k <= k) return {heuristic, true};

  ColoringSearch search(gc, deadline, k);
  search.run(clique, k + 1, k);
  if (search.found()) return {search.best(), true};
  return {std::nullopt, !search.timed_out()};
}

}  // namespace

ClustergraphResult clustergraph(const DissimilarityMatrix& d, double d_max, Deadline deadline) {
  if (d_max < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  const std::size_t n = d.size();
  const auto order = fpf_order(d);

  const ThresholdGraph g = build_threshold_graph(d, d_max);
  const ComplementGraph gc = complement(g);
  const auto base =
      exact_coloring(gc, deadline, greedy_independent_set(g, order));
  const std::size_t k_star = base.coloring.k;

  // Candidate thresholds: 0 plus every realized dissimilarity <= d_max. The
  // achievable maximum diameter is always one of these.
  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) <= d_max) candidates.push_back(d(i, j));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Coloring best_coloring = base.coloring;
  bool proven = base.proven;

  if (proven) {
    // k-colorability is monotone in the threshold; binary search for the
    // smallest candidate that still admits k_star colors. The largest
    // candidate is feasible (same graph as at d_max).
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      ProbeOutcome probe = probe_k_colorable(d, candidates[mid], k_star, order, deadline);
      if (!probe.certain) {
        proven = false;
        break;
      }
      if (probe.coloring) {
        best_coloring = std::move(*probe.coloring);
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
  }

  ClustergraphResult result;
  result.partition = coloring_to_partition(best_coloring);
  result.proven = proven;
  std::vector<std::vector<std::size_t>> clusters(result.partition.k);
  for (std::size_t i = 0; i < n; ++i) clusters[result.partition.labels[i]].push_back(i);
  for (const auto& members : clusters)
    result.achieved_diameter = std::max(result.achieved_diameter, diameter(members, d));
  return result;
}

Partition coloring_to_partition(const Coloring& coloring) {
  Partition p;
  p.labels = coloring.colors;
  p.k = coloring.k;
  return relabel_compact(p);
}

}  // namespace eqw
