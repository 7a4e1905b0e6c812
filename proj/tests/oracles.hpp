#pragma once

// Test-only brute-force oracles. Everything here is deliberately independent
// of the solver implementations it checks: plain subset/partition
// enumeration, no shared helpers beyond the domain types.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "eqw/graph.hpp"
#include "eqw/homoset.hpp"
#include "eqw/model.hpp"

namespace eqw::testing {

/// Random symmetric matrix with zero diagonal, entries uniform in
/// (0, max_value].
DissimilarityMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double max_value = 1.0);

/// Matrix of |x_i - x_j| over 1-D coordinates.
DissimilarityMatrix from_points_1d(const std::vector<double>& coords);

/// The six-point line instance with coordinates {0, 1, 2, 10, 11, 20}.
DissimilarityMatrix line_instance();

/// Complement of m disjoint triangles (complete m-partite graph with parts
/// of size 3), as a threshold graph at threshold 1.
ThresholdGraph moon_moser_graph(std::size_t m);

/// Fewest clusters over all set partitions where every cluster's diameter
/// is at most `threshold` (exhaustive search with feasibility pruning).
std::size_t min_diameter_partition_bruteforce(const DissimilarityMatrix& d, double threshold);

/// Same value by an independent route: dynamic programming over subsets.
std::size_t min_diameter_partition_dp(const DissimilarityMatrix& d, double threshold);

struct CountDiameter {
  std::size_t count = 0;
  double max_diameter = 0.0;
};

/// Lexicographically minimal (cluster count, max cluster diameter) over all
/// diameter-homogeneous partitions at `threshold`.
CountDiameter best_count_then_diameter(const DissimilarityMatrix& d, double threshold);

/// Smallest dominating set of the graph (closed neighborhoods), over all
/// vertex subsets.
std::size_t min_dominating_set_bruteforce(const AdjacencyGraph& g);

/// All maximal homogeneous subsets under the constraint, by enumerating
/// every nonempty subset. Sets are sorted member lists; the family is
/// sorted for direct comparison.
std::set<std::vector<std::size_t>> maximal_homogeneous_sets_bruteforce(
    const DissimilarityMatrix& d, const WidthConstraint& c);

/// Minimum number of collection sets covering the universe, over all
/// subsets of the collection. Requires at most ~22 sets.
std::size_t min_cover_bruteforce(const HomogeneousSetCollection& c);

/// Chromatic number by iterative-deepening color assignment.
std::size_t chromatic_number_bruteforce(const AdjacencyGraph& g);

/// Unconstrained DTW (absolute-difference local cost) by memoized recursion.
double dtw_naive(const std::vector<double>& a, const std::vector<double>& b);

/// H_n = sum_{k=1..n} 1/k.
double harmonic(std::size_t n);

}  // namespace eqw::testing
