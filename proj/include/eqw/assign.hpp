#pragma once

#include "eqw/cover.hpp"
#include "eqw/model.hpp"

namespace eqw {

/// How elements claimed by several chosen sets are resolved.
///   ClosestCenter — send each one to the candidate cluster whose
///     provisional center is nearest (serves the max-width and WCSD
///     sub-objectives).
///   LargestFirst — let clusters absorb their undecided members in
///     decreasing order of decided-core size (serves the size-variance
///     sub-objective).
enum class AssignmentStrategy { ClosestCenter, LargestFirst };

/// Turns a cover into a disjoint partition. Elements in exactly one chosen
/// set keep that set; under a radius constraint each ball's center also
/// stays home under ClosestCenter, so every member remains within the
/// threshold of its cluster's declared center. The result always satisfies
/// the constraint the cover was built under.
Partition assign_unique(const Cover& cover, const DissimilarityMatrix& d,
                        const WidthConstraint& c, AssignmentStrategy strategy);

/// Renumbers labels 0..k'-1 in first-occurrence order, dropping unused ids
/// (and their centers, if any).
Partition relabel_compact(const Partition& p);

}  // namespace eqw
