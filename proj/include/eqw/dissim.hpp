#pragma once

#include <span>
#include <string>
#include <vector>

#include "eqw/model.hpp"

namespace eqw {

/// Feature-vector dataset. Class labels, when present, are kept for
/// reporting only; no solver reads them.
struct PointDataset {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> class_labels;  // empty when absent

  std::size_t n() const { return rows.size(); }
  std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// Time-series dataset; series may have unequal lengths.
struct SeriesDataset {
  std::vector<std::vector<double>> series;
  std::size_t window = 4;

  std::size_t n() const { return series.size(); }
};

/// Pairwise L2 distances between rows.
DissimilarityMatrix euclidean_matrix(const PointDataset& ds);

/// Dynamic time warping under a Sakoe-Chiba band |i-j| <= window, local cost
/// |a_i - b_j|, endpoints aligned, no path-length normalization. Throws when
/// the band admits no warping path (window < length difference).
double dtw(std::span<const double> a, std::span<const double> b, std::size_t window);

/// Pairwise DTW matrix. Each pair is truncated to its shorter length before
/// warping, so any window is feasible.
DissimilarityMatrix dtw_matrix(const SeriesDataset& ds);

}  // namespace eqw
