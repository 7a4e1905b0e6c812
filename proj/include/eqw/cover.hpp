#pragma once

#include <span>

#include "eqw/deadline.hpp"
#include "eqw/homoset.hpp"
#include "eqw/model.hpp"

namespace eqw {

/// A selection of homogeneous sets jointly covering 0..n-1. Sets may
/// overlap; the cardinality is the cluster count. `chosen_indices` are the
/// positions in the source collection, which distinguishes covers that pick
/// different but equal-membered sets.
struct Cover {
  std::vector<HomogeneousSet> chosen;
  std::size_t universe_size = 0;
  std::vector<std::size_t> chosen_indices;
};

enum class SubObjective { None, MaxWidth, Wcsd, SizeVariance };

struct CoverSolution {
  Cover cover;
  bool proven = false;  // false when the time limit cut the search short
};

struct CoverEnumeration {
  std::vector<Cover> covers;  // canonical order (sorted set indices, lexicographic)
  bool proven = false;        // the optimum cardinality is certified
  bool complete = false;      // every minimum cover is listed
};

inline constexpr std::size_t kDefaultEnumLimit = 100'000;

/// Chvatal's greedy: repeatedly pick the set covering the most uncovered
/// elements (ties by lowest first member, then lowest index). Cardinality is
/// within a factor H_n of the optimum. Throws when some element is in no set.
Cover greedy_cover(const HomogeneousSetCollection& c);

/// Minimum-cardinality cover by depth-first branch and bound: branches on a
/// least-covered uncovered element over its containing sets in
/// decreasing-coverage order, seeds the incumbent with greedy_cover, and
/// lower-bounds with a greedy packing of elements no set covers together.
/// Refuses truncated collections; a hit deadline returns the incumbent
/// unproven.
CoverSolution exact_min_cover(const HomogeneousSetCollection& c, Deadline deadline = {});

/// All minimum-cardinality covers (each exactly once) up to `limit`, found
/// by the same search continued past the first optimum.
CoverEnumeration enumerate_min_covers(const HomogeneousSetCollection& c,
                                      std::size_t limit = kDefaultEnumLimit,
                                      Deadline deadline = {});

/// Picks among same-cardinality covers: MaxWidth minimizes the largest set
/// width, Wcsd minimizes the per-set dissimilarity sum (to the center for
/// radius sets, pairwise otherwise), SizeVariance maximizes the sum of
/// squared sizes, None keeps the first. Ties keep the earliest cover.
const Cover& select_cover(std::span<const Cover> covers, const DissimilarityMatrix& d,
                          SubObjective sub);

}  // namespace eqw
