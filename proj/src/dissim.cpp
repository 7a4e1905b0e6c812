#include "eqw/dissim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eqw {

DissimilarityMatrix euclidean_matrix(const PointDataset& ds) {
  if (ds.n() == 0) throw std::invalid_argument("point dataset is empty");
  const std::size_t dim = ds.dim();
  for (std::size_t i = 0; i < ds.n(); ++i) {
    if (ds.rows[i].size() != dim)
      throw std::invalid_argument("point dataset row " + std::to_string(i) +
                                  " has inconsistent dimension");
    for (double v : ds.rows[i])
      if (!std::isfinite(v))
        throw std::invalid_argument("point dataset row " + std::to_string(i) +
                                    " has a non-finite value");
  }

  DissimilarityMatrix m(ds.n());
  for (std::size_t i = 0; i < ds.n(); ++i)
    for (std::size_t j = i + 1; j < ds.n(); ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < dim; ++t) {
        const double diff = ds.rows[i][t] - ds.rows[j][t];
        s += diff * diff;
      }
      m.set(i, j, std::sqrt(s));
    }
  return m;
}

double dtw(std::span<const double> a, std::span<const double> b, std::size_t window) {
  if (a.empty() || b.empty()) throw std::invalid_argument("dtw of an empty series");
  const std::size_t la = a.size(), lb = b.size();
  const std::size_t diff = la > lb ? la - lb : lb - la;
  if (window < diff)
    throw std::invalid_argument("dtw band of width " + std::to_string(window) +
                                " admits no warping path for lengths " + std::to_string(la) +
                                " and " + std::to_string(lb));

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Rolling two-row DP over the banded cost table.
  std::vector<double> prev(lb + 1, kInf), cur(lb + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= la; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    const std::size_t lo = i > window ? i - window : 1;
    const std::size_t hi = std::min(lb, i + window);
    for (std::size_t j = lo; j <= hi; ++j) {
      const double local = std::abs(a[i - 1] - b[j - 1]);
      cur[j] = local + std::min({prev[j - 1], prev[j], cur[j - 1]});
    }
    std::swap(prev, cur);
  }
  return prev[lb];
}

DissimilarityMatrix dtw_matrix(const SeriesDataset& ds) {
  if (ds.n() == 0) throw std::invalid_argument("series dataset is empty");
  for (std::size_t i = 0; i < ds.n(); ++i)
    if (ds.series[i].empty())
      throw std::invalid_argument("series " + std::to_string(i) + " is empty");

  DissimilarityMatrix m(ds.n());
  for (std::size_t i = 0; i < ds.n(); ++i)
    for (std::size_t j = i + 1; j < ds.n(); ++j) {
      const std::size_t len = std::min(ds.series[i].size(), ds.series[j].size());
      m.set(i, j, dtw(std::span(ds.series[i]).first(len), std::span(ds.series[j]).first(len),
                      ds.window));
    }
  return m;
}

}  // namespace eqw
