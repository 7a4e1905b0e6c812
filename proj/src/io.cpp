#include "eqw/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace eqw {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::optional<double> parse_double(const std::string& cell) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw IngestionError(path + " contains no data rows");
  return rows;
}

double parse_cell(const std::vector<std::vector<std::string>>& rows, std::size_t r,
                  std::size_t c, const std::string& path) {
  const auto value = parse_double(rows[r][c]);
  if (!value)
    throw IngestionError(path + ": non-numeric cell at row " + std::to_string(r + 1) +
                         ", column " + std::to_string(c + 1));
  return *value;
}

}  // namespace

PointDataset load_points_csv(const std::string& path, std::optional<std::size_t> label_column) {
  auto rows = read_rows(path);
  const std::size_t width = rows[0].size();
  if (label_column && *label_column >= width)
    throw IngestionError(path + ": label column " + std::to_string(*label_column) +
                         " is outside the " + std::to_string(width) + "-column data");

  // Header row: any feature cell of row 1 that is not a number.
  std::size_t first_data_row = 0;
  for (std::size_t c = 0; c < width; ++c) {
    if (label_column && c == *label_column) continue;
    if (!parse_double(rows[0][c])) {
      first_data_row = 1;
      break;
    }
  }
  if (first_data_row == rows.size()) throw IngestionError(path + " contains no data rows");

  PointDataset ds;
  for (std::size_t r = first_data_row; r < rows.size(); ++r) {
    if (rows[r].size() != width)
      throw IngestionError(path + ": row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " cells, expected " +
                           std::to_string(width));
    std::vector<double> features;
    features.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      if (label_column && c == *label_column) continue;
      features.push_back(parse_cell(rows, r, c, path));
    }
    ds.rows.push_back(std::move(features));
    if (label_column) ds.class_labels.push_back(rows[r][*label_column]);
  }
  return ds;
}

DissimilarityMatrix load_matrix_csv(const std::string& path) {
  auto rows = read_rows(path);
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw IngestionError(path + ": row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " cells, expected a " +
                           std::to_string(n) + "x" + std::to_string(n) + " matrix");
    for (std::size_t c = 0; c < n; ++c) values.push_back(parse_cell(rows, r, c, path));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (values[i * n + i] != 0.0)
      throw IngestionError(path + ": nonzero diagonal at row " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (values[i * n + j] < 0.0)
        throw IngestionError(path + ": negative value at row " + std::to_string(i + 1) +
                             ", column " + std::to_string(j + 1));
      if (values[i * n + j] != values[j * n + i])
        throw IngestionError(path + ": asymmetric values at row " + std::to_string(i + 1) +
                             ", column " + std::to_string(j + 1));
    }
  }
  return DissimilarityMatrix::from_values(n, std::move(values));
}

SeriesDataset load_series_csv(const std::string& path, std::size_t window) {
  auto rows = read_rows(path);
  SeriesDataset ds;
  ds.window = window;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> series;
    series.reserve(rows[r].size());
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      series.push_back(parse_cell(rows, r, c, path));
    if (series.empty())
      throw IngestionError(path + ": row " + std::to_string(r + 1) + " is empty");
    ds.series.push_back(std::move(series));
  }
  return ds;
}

void write_labels_csv(const std::string& path, const Partition& p) {
  std::ofstream out(path);
  if (!out) throw IngestionError("cannot write " + path);
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    out << i << "," << p.labels[i] << "\n";
}

}  // namespace eqw
