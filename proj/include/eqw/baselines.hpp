#pragma once

#include <span>

#include "eqw/deadline.hpp"
#include "eqw/graph.hpp"
#include "eqw/model.hpp"

namespace eqw {

/// Proper coloring of the complement graph; color classes are clusters.
struct Coloring {
  std::vector<std::size_t> colors;  // per-vertex color id 0..k-1
  std::size_t k = 0;
};

/// Agglomeration trace. Clusters are identified by their smallest member;
/// complete link is monotone, so distances are nondecreasing.
struct DendrogramMerge {
  std::size_t cluster_a = 0;
  std::size_t cluster_b = 0;
  double distance = 0.0;
};

struct Dendrogram {
  std::vector<DendrogramMerge> merges;
};

struct ColoringResult {
  Coloring coloring;
  bool proven = false;
};

struct ClustergraphResult {
  Partition partition;
  double achieved_diameter = 0.0;
  bool proven = false;
};

/// Complete-link agglomerative clustering with distance cutoff: merges the
/// closest pair (by max inter-cluster dissimilarity) while that distance is
/// <= threshold. Always diameter-homogeneous, no optimality guarantee.
Partition hac_complete_link(const DissimilarityMatrix& d, double threshold);

/// The full complete-link merge sequence (no cutoff).
Dendrogram complete_link_dendrogram(const DissimilarityMatrix& d);

/// Classic saturation-degree greedy: color the vertex with the most
/// distinct neighbor colors first (ties by higher degree, then lower index)
/// using the smallest feasible color.
Coloring dsatur_heuristic(const ComplementGraph& g);

/// Minimum coloring by DSATUR-guided branch and bound. The upper bound comes
/// from dsatur_heuristic, the lower bound from `seed_clique` (pairwise
/// adjacent vertices, typically a greedy independent set of the threshold
/// graph over the FPF order); clique vertices are pre-colored and each
/// branch may open at most one new color. A hit deadline returns the best
/// incumbent unproven.
ColoringResult exact_coloring(const ComplementGraph& g, Deadline deadline = {},
                              std::span<const std::size_t> seed_clique = {});

/// Fewest clusters and, among such partitions, the smallest achievable
/// maximum diameter: colors the complement at d_max for the optimal count,
/// then binary-searches the sorted distinct dissimilarity values for the
/// smallest threshold that still admits that many colors.
ClustergraphResult clustergraph(const DissimilarityMatrix& d, double d_max,
                                Deadline deadline = {});

/// Color classes as clusters; diameter-homogeneous at the colored graph's
/// threshold.
Partition coloring_to_partition(const Coloring& coloring);

}  // namespace eqw
