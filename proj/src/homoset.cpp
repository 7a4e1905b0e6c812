#include "eqw/homoset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace eqw {

HomogeneousSetCollection radius_balls(const DissimilarityMatrix& d, double r_max) {
  if (r_max < 0.0) throw std::invalid_argument("radius threshold must be nonnegative");
  HomogeneousSetCollection c;
  c.constraint = {ConstraintKind::Radius, r_max};
  c.universe_size = d.size();
  c.sets.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    HomogeneousSet ball;
    ball.center = i;
    for (std::size_t e = 0; e < d.size(); ++e)
      if (d(i, e) <= r_max) ball.members.push_back(e);
    c.sets.push_back(std::move(ball));
  }
  return c;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Peel minimum-degree vertices to get a degeneracy order.
std::vector<std::size_t> degeneracy_order(const AdjacencyGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n), order;
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (std::size_t u : g.neighbors(best))
      if (!removed[u]) --deg[u];
  }
  return order;
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const AdjacencyGraph& g, std::size_t cap, HomogeneousSetCollection& out)
      : g_(g), cap_(cap), out_(out) {}

  void run() {
    const std::size_t n = g_.size();
    const auto order = degeneracy_order(g_);
    std::vector<std::size_t> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

    for (std::size_t v : order) {
      Bits candidates(n), excluded(n);
      for (std::size_t u : g_.neighbors(v)) {
        if (rank[u] > rank[v])
          candidates.set(u);
        else
          excluded.set(u);
      }
      stack_.push_back(v);
      if (!expand(candidates, excluded)) return;  // cap hit
      stack_.pop_back();
    }
  }

 private:
  // Bron-Kerbosch with a pivot maximizing |candidates & N(pivot)|.
  // Returns false once the cap is reached.
  bool expand(Bits candidates, Bits excluded) {
    if (candidates.none() && excluded.none()) return emit();

    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    Bits both = candidates | excluded;
    for (std::size_t u = both.find_first(); u != Bits::npos; u = both.find_next(u)) {
      const std::size_t score = (candidates & g_.neighbor_bits(u)).count();
      if (!have_pivot || score > best) {
        have_pivot = true;
        best = score;
        pivot = u;
      }
    }

    Bits tried = candidates - g_.neighbor_bits(pivot);
    for (std::size_t v = tried.find_first(); v != Bits::npos; v = tried.find_next(v)) {
      stack_.push_back(v);
      if (!expand(candidates & g_.neighbor_bits(v), excluded & g_.neighbor_bits(v)))
        return false;
      stack_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
    return true;
  }

  bool emit() {
    if (out_.sets.size() >= cap_) {
      out_.truncated = true;
      return false;
    }
    HomogeneousSet clique;
    clique.members = stack_;
    std::sort(clique.members.begin(), clique.members.end());
    out_.sets.push_back(std::move(clique));
    return true;
  }

  const AdjacencyGraph& g_;
  std::size_t cap_;
  HomogeneousSetCollection& out_;
  std::vector<std::size_t> stack_;
};

}  // namespace

HomogeneousSetCollection maximal_cliques(const ThresholdGraph& g, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("clique cap must be at least 1");
  HomogeneousSetCollection c;
  c.constraint = {ConstraintKind::Diameter, g.threshold()};
  c.universe_size = g.size();
  CliqueEnumerator(g, cap, c).run();
  return c;
}

HomogeneousSetCollection prune_dominated(const HomogeneousSetCollection& c) {
  const std::size_t m = c.sets.size();
  std::vector<boost::dynamic_bitset<>> bits(m, boost::dynamic_bitset<>(c.universe_size));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t e : c.sets[s].members) bits[s].set(e);

  auto center_of = [&](std::size_t s) {
    return c.sets[s].center.value_or(std::numeric_limits<std::size_t>::max());
  };

  HomogeneousSetCollection pruned;
  pruned.constraint = c.constraint;
  pruned.universe_size = c.universe_size;
  pruned.truncated = c.truncated;
  for (std::size_t s = 0; s < m; ++s) {
    bool dominated = false;
    for (std::size_t t = 0; t < m && !dominated; ++t) {
      if (t == s || !bits[s].is_subset_of(bits[t])) continue;
      if (bits[s] != bits[t]) {
        dominated = true;  // strict subset
      } else {
        // Equal sets: keep the lowest center, then the earliest position.
        if (center_of(t) < center_of(s) || (center_of(t) == center_of(s) && t < s))
          dominated = true;
      }
    }
    if (!dominated) pruned.sets.push_back(c.sets[s]);
  }
  return pruned;
}

}  // namespace eqw
