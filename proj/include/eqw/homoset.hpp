#pragma once

#include "eqw/graph.hpp"
#include "eqw/model.hpp"

namespace eqw {

/// Output of the enumeration step: all maximal homogeneous sets (radius
/// balls or maximal cliques) under one constraint.
struct HomogeneousSetCollection {
  std::vector<HomogeneousSet> sets;
  WidthConstraint constraint;
  std::size_t universe_size = 0;
  bool truncated = false;  // diameter enumeration hit its cap
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// One ball per element: S_i = {e | d(i,e) <= r_max}, centered on i. The
/// result contains every maximal radius-homogeneous set (plus non-maximal
/// balls, which prune_dominated removes).
HomogeneousSetCollection radius_balls(const DissimilarityMatrix& d, double r_max);

/// All maximal cliques of the threshold graph, each emitted once, by
/// pivot-based recursion over candidate/excluded sets with a
/// degeneracy-order outer loop. Stops after `cap` cliques and flags the
/// collection truncated; exact covering refuses truncated input.
HomogeneousSetCollection maximal_cliques(const ThresholdGraph& g,
                                         std::size_t cap = kDefaultCliqueCap);

/// Drops every set that is a strict subset of another; among equal sets the
/// one with the lowest center survives. Never changes the optimal cover
/// cardinality.
HomogeneousSetCollection prune_dominated(const HomogeneousSetCollection& c);

}  // namespace eqw
