#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "eqw/dissim.hpp"
#include "eqw/model.hpp"

namespace eqw {

/// Malformed input file (ragged rows, non-numeric cells, asymmetric or
/// negative matrix). The message carries the 1-based row/column location.
class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated feature vectors, one element per row. A header row is
/// detected (and skipped) when any feature cell of the first row fails to
/// parse as a number. `label_column` extracts that column as a class label
/// instead of a feature.
PointDataset load_points_csv(const std::string& path,
                             std::optional<std::size_t> label_column = {});

/// Square numeric CSV, no header; checked against all matrix invariants
/// (exact symmetry required).
DissimilarityMatrix load_matrix_csv(const std::string& path);

/// One series per row; ragged rows are allowed.
SeriesDataset load_series_csv(const std::string& path, std::size_t window = 4);

/// element-index,cluster-id rows.
void write_labels_csv(const std::string& path, const Partition& p);

}  // namespace eqw
