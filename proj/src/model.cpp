#include "eqw/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eqw {

DissimilarityMatrix DissimilarityMatrix::from_values(std::size_t n, std::vector<double> values) {
  if (n == 0) throw std::invalid_argument("dissimilarity matrix needs at least one element");
  if (values.size() != n * n)
    throw std::invalid_argument("dissimilarity matrix buffer has wrong size");
  DissimilarityMatrix m(n);
  m.values_ = std::move(values);
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0.0)
      throw std::invalid_argument("dissimilarity matrix has nonzero diagonal at " +
                                  std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = m(i, j);
      if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("dissimilarity matrix has invalid value at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (v != m(j, i))
        throw std::invalid_argument("dissimilarity matrix is not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return m;
}

void DissimilarityMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("dissimilarity index out of range");
  if (!(value >= 0.0) || !std::isfinite(value))
    throw std::invalid_argument("dissimilarity values must be finite and nonnegative");
  if (i == j && value != 0.0)
    throw std::invalid_argument("diagonal dissimilarity must be zero");
  values_[i * n_ + j] = value;
  values_[j * n_ + i] = value;
}

namespace {

void require_members(std::span<const std::size_t> members, const DissimilarityMatrix& d,
                     const char* op) {
  if (members.empty()) throw std::invalid_argument(std::string(op) + " of an empty set");
  for (std::size_t m : members)
    if (m >= d.size()) throw std::out_of_range(std::string(op) + ": member index out of range");
}

}  // namespace

double diameter(std::span<const std::size_t> members, const DissimilarityMatrix& d) {
  require_members(members, d, "diameter");
  double max = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      max = std::max(max, d(members[a], members[b]));
  return max;
}

RadiusResult radius(std::span<const std::size_t> members, const DissimilarityMatrix& d) {
  require_members(members, d, "radius");
  RadiusResult best{std::numeric_limits<double>::infinity(), members[0]};
  for (std::size_t a : members) {
    double ecc = 0.0;
    for (std::size_t b : members) ecc = std::max(ecc, d(a, b));
    if (ecc < best.value || (ecc == best.value && a < best.center)) best = {ecc, a};
  }
  return best;
}

double width_of(std::span<const std::size_t> members, const DissimilarityMatrix& d,
                ConstraintKind kind) {
  return kind == ConstraintKind::Diameter ? diameter(members, d) : radius(members, d).value;
}

std::vector<double> center_diameter(std::span<const std::size_t> members,
                                    const std::vector<std::vector<double>>& points) {
  if (points.empty())
    throw std::invalid_argument("center_diameter requires raw coordinates, none available");
  if (members.empty()) throw std::invalid_argument("center_diameter of an empty set");
  for (std::size_t m : members)
    if (m >= points.size()) throw std::out_of_range("center_diameter: member index out of range");

  const std::size_t dim = points[members[0]].size();
  auto sq_dist = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t t = 0; t < dim; ++t) {
      const double diff = points[a][t] - points[b][t];
      s += diff * diff;
    }
    return s;
  };

  // Furthest pair, ties by lexicographically smallest index pair.
  std::size_t best_a = members[0], best_b = members[0];
  double best = -1.0;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a; b < members.size(); ++b) {
      const double s = sq_dist(members[a], members[b]);
      if (s > best) {
        best = s;
        best_a = members[a];
        best_b = members[b];
      }
    }

  std::vector<double> mid(dim);
  for (std::size_t t = 0; t < dim; ++t) mid[t] = (points[best_a][t] + points[best_b][t]) / 2.0;
  return mid;
}

namespace {

std::vector<std::vector<std::size_t>> clusters_of(const Partition& p) {
  std::vector<std::vector<std::size_t>> clusters(p.k);
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    if (p.labels[i] >= p.k) throw std::invalid_argument("partition label out of range");
    clusters[p.labels[i]].push_back(i);
  }
  return clusters;
}

}  // namespace

double wcsd(const Partition& p, const DissimilarityMatrix& d) {
  double total = 0.0;
  for (const auto& members : clusters_of(p))
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) total += d(members[a], members[b]);
  return total;
}

std::int64_t size_variance_objective(const Partition& p) {
  std::vector<std::int64_t> sizes(p.k, 0);
  for (std::size_t label : p.labels) {
    if (label >= p.k) throw std::invalid_argument("partition label out of range");
    ++sizes[label];
  }
  std::int64_t total = 0;
  for (std::int64_t s : sizes) total += s * s;
  return total;
}

PartitionMetrics validate_partition(const Partition& p, const DissimilarityMatrix& d,
                                    const WidthConstraint& c) {
  if (p.labels.size() != d.size())
    throw std::invalid_argument("partition does not label every element");
  if (p.k == 0) throw std::invalid_argument("partition has no clusters");
  if (p.centers && p.centers->size() != p.k)
    throw std::invalid_argument("partition centers do not match cluster count");

  const auto clusters = clusters_of(p);
  PartitionMetrics metrics;
  metrics.per_cluster_width.reserve(p.k);
  for (std::size_t cid = 0; cid < p.k; ++cid) {
    const auto& members = clusters[cid];
    if (members.empty())
      throw std::invalid_argument("cluster id " + std::to_string(cid) + " is unused");

    const double width = width_of(members, d, c.kind);
    if (width > c.threshold)
      throw ValidationError("cluster " + std::to_string(cid) + " has width " +
                                std::to_string(width) + " above threshold " +
                                std::to_string(c.threshold),
                            cid, width);
    if (p.centers) {
      const std::size_t center = (*p.centers)[cid];
      if (center >= d.size()) throw std::invalid_argument("declared center out of range");
      double ecc = 0.0;
      for (std::size_t m : members) ecc = std::max(ecc, d(center, m));
      if (ecc > c.threshold)
        throw ValidationError("cluster " + std::to_string(cid) + " center " +
                                  std::to_string(center) + " has eccentricity " +
                                  std::to_string(ecc) + " above threshold " +
                                  std::to_string(c.threshold),
                              cid, ecc);
    }

    metrics.per_cluster_width.push_back(width);
    metrics.max_width = std::max(metrics.max_width, width);
    metrics.size_variance_objective +=
        static_cast<std::int64_t>(members.size()) * static_cast<std::int64_t>(members.size());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        metrics.wcsd += d(members[a], members[b]);
  }
  return metrics;
}

}  // namespace eqw
