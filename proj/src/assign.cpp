#include "eqw/assign.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace eqw {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

}  // namespace

Partition assign_unique(const Cover& cover, const DissimilarityMatrix& d,
                        const WidthConstraint& c, AssignmentStrategy strategy) {
  const std::size_t n = cover.universe_size;
  const std::size_t k = cover.chosen.size();
  if (n != d.size()) throw std::invalid_argument("cover universe does not match the matrix");
  if (k == 0) throw std::invalid_argument("cover is empty");

  const bool radius = c.kind == ConstraintKind::Radius;
  for (const auto& set : cover.chosen) {
    if (set.members.empty()) throw std::runtime_error("cover inconsistency: empty chosen set");
    if (radius && !set.center)
      throw std::invalid_argument("radius assignment needs a center on every chosen set");
  }

  std::vector<std::vector<std::size_t>> candidate_clusters(n);
  for (std::size_t cid = 0; cid < k; ++cid)
    for (std::size_t e : cover.chosen[cid].members) {
      if (e >= n) throw std::invalid_argument("cover member outside the universe");
      candidate_clusters[e].push_back(cid);
    }
  for (std::size_t e = 0; e < n; ++e)
    if (candidate_clusters[e].empty())
      throw std::runtime_error("cover inconsistency: element " + std::to_string(e) +
                               " is covered by no chosen set");

  // Decided core: elements claimed by exactly one chosen set. Under
  // ClosestCenter with a radius constraint, ball centers also stay home.
  std::vector<std::size_t> label(n, kUnassigned);
  for (std::size_t e = 0; e < n; ++e)
    if (candidate_clusters[e].size() == 1) label[e] = candidate_clusters[e].front();
  if (radius && strategy == AssignmentStrategy::ClosestCenter)
    for (std::size_t cid = 0; cid < k; ++cid) label[*cover.chosen[cid].center] = cid;

  std::vector<std::vector<std::size_t>> core(k);
  for (std::size_t e = 0; e < n; ++e)
    if (label[e] != kUnassigned) core[label[e]].push_back(e);

  for (std::size_t cid = 0; cid < k; ++cid) {
    if (!core[cid].empty()) continue;
    const auto& members = cover.chosen[cid].members;
    const bool claimable = std::any_of(members.begin(), members.end(),
                                       [&](std::size_t e) { return label[e] == kUnassigned; });
    if (!claimable)
      throw std::runtime_error("cover inconsistency: cluster " + std::to_string(cid) +
                               " has no core and no undecided member");
  }

  if (strategy == AssignmentStrategy::ClosestCenter) {
    // Provisional centers on the decided cores; ball centers for radius.
    std::vector<std::optional<std::size_t>> center(k);
    for (std::size_t cid = 0; cid < k; ++cid) {
      if (radius)
        center[cid] = *cover.chosen[cid].center;
      else if (!core[cid].empty())
        center[cid] = eqw::radius(core[cid], d).center;
    }

    for (std::size_t e = 0; e < n; ++e) {
      if (label[e] != kUnassigned) continue;
      std::size_t best = kUnassigned;
      double best_dist = 0.0;
      for (std::size_t cid : candidate_clusters[e]) {
        if (!center[cid]) continue;
        const double dist = d(e, *center[cid]);
        if (best == kUnassigned || dist < best_dist) {
          best = cid;
          best_dist = dist;
        }
      }
      if (best == kUnassigned) {
        // Every candidate core is empty; fall back to the largest-first rule
        // for this element (all empty means the lowest cluster id).
        std::size_t largest = 0;
        for (std::size_t cid : candidate_clusters[e])
          if (best == kUnassigned || core[cid].size() > largest) {
            best = cid;
            largest = core[cid].size();
          }
      }
      label[e] = best;
    }
  } else {
    std::vector<std::size_t> cluster_order(k);
    std::iota(cluster_order.begin(), cluster_order.end(), 0);
    std::stable_sort(cluster_order.begin(), cluster_order.end(),
                     [&](std::size_t a, std::size_t b) { return core[a].size() > core[b].size(); });
    for (std::size_t cid : cluster_order)
      for (std::size_t e : cover.chosen[cid].members)
        if (label[e] == kUnassigned) label[e] = cid;
  }

  Partition p;
  p.labels = std::move(label);
  p.k = k;
  if (radius) {
    std::vector<std::size_t> centers(k);
    for (std::size_t cid = 0; cid < k; ++cid) centers[cid] = *cover.chosen[cid].center;
    p.centers = std::move(centers);
  }
  return relabel_compact(p);
}

Partition relabel_compact(const Partition& p) {
  constexpr std::size_t kUnmapped = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> remap(p.k, kUnmapped);
  Partition out;
  out.labels.reserve(p.labels.size());
  std::size_t next = 0;
  for (std::size_t old : p.labels) {
    if (old >= p.k) throw std::invalid_argument("partition label out of range");
    if (remap[old] == kUnmapped) remap[old] = next++;
    out.labels.push_back(remap[old]);
  }
  out.k = next;
  if (p.centers) {
    std::vector<std::size_t> centers(next);
    for (std::size_t old = 0; old < p.k; ++old)
      if (remap[old] != kUnmapped) centers[remap[old]] = (*p.centers)[old];
    out.centers = std::move(centers);
  }
  return out;
}

}  // namespace eqw
