#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqw {

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
/// Elements are identified by their row/column index 0..n-1; this matrix is
/// the sole input of every solver in the library.
class DissimilarityMatrix {
 public:
  explicit DissimilarityMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {
    if (n == 0) throw std::invalid_argument("dissimilarity matrix needs at least one element");
  }

  /// Takes ownership of a dense row-major n*n buffer and checks all matrix
  /// invariants (zero diagonal, exact symmetry, nonnegative entries).
  static DissimilarityMatrix from_values(std::size_t n, std::vector<double> values);

  /// Sets d(i,j) and d(j,i). Rejects negative values and i == j with v != 0.
  void set(std::size_t i, std::size_t j, double value);

  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

enum class ConstraintKind { Diameter, Radius };

/// Wideness constraint: every cluster's diameter (or radius) must be at most
/// `threshold`. Comparisons are exact (<=), no epsilon.
struct WidthConstraint {
  ConstraintKind kind = ConstraintKind::Diameter;
  double threshold = 0.0;
};

/// Candidate cluster material: an index subset, with the generating center
/// when built under a radius constraint.
struct HomogeneousSet {
  std::vector<std::size_t> members;      // sorted ascending, nonempty
  std::optional<std::size_t> center;     // present iff built under a radius constraint
};

struct Partition {
  std::vector<std::size_t> labels;       // per-element cluster id in 0..k-1
  std::size_t k = 0;
  // Per-cluster representative (radius runs). A representative may end up
  // outside its cluster after greedy assignment; it still witnesses the
  // radius bound for every member.
  std::optional<std::vector<std::size_t>> centers;
};

struct PartitionMetrics {
  double max_width = 0.0;
  double wcsd = 0.0;                         // unordered-pair convention
  std::int64_t size_variance_objective = 0;  // sum of squared cluster sizes
  std::vector<double> per_cluster_width;
};

/// A cluster exceeded the width constraint (or a declared center stopped
/// being a valid witness). Carries the offending cluster and its width.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, std::size_t cluster, double width)
      : std::runtime_error(message), cluster_(cluster), width_(width) {}
  std::size_t cluster() const { return cluster_; }
  double width() const { return width_; }

 private:
  std::size_t cluster_;
  double width_;
};

/// Maximum pairwise dissimilarity within `members`; 0 for singletons.
double diameter(std::span<const std::size_t> members, const DissimilarityMatrix& d);

struct RadiusResult {
  double value = 0.0;
  std::size_t center = 0;
};

/// Minimum eccentricity over `members` plus the element realizing it
/// (ties broken by lowest index).
RadiusResult radius(std::span<const std::size_t> members, const DissimilarityMatrix& d);

/// Width of a member set under the given constraint kind.
double width_of(std::span<const std::size_t> members, const DissimilarityMatrix& d,
                ConstraintKind kind);

/// Midpoint of a furthest pair of `members` in coordinate space. Only
/// defined when raw coordinates exist; matrix-only pipelines use the radius
/// center as representative instead.
std::vector<double> center_diameter(std::span<const std::size_t> members,
                                    const std::vector<std::vector<double>>& points);

/// Within-cluster sum of dissimilarities over unordered pairs.
double wcsd(const Partition& p, const DissimilarityMatrix& d);

/// Sum of squared cluster sizes (to be maximized).
std::int64_t size_variance_objective(const Partition& p);

/// Checks structure (complete labeling, all ids used) and homogeneity of
/// every cluster under `c`; also checks that any declared center keeps all
/// its cluster members within the threshold. Returns the partition metrics,
/// throws ValidationError otherwise.
PartitionMetrics validate_partition(const Partition& p, const DissimilarityMatrix& d,
                                    const WidthConstraint& c);

}  // namespace eqw
