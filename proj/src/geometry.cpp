#include "wass/geometry.hpp"

#include <cmath>
#include <string>

#include "wass/error.hpp"

namespace wass {

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::Shape, "cost matrix data does not match its dimensions");
  }
}

CostMatrix CostMatrix::transposed() const {
  std::vector<double> t(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t[j * rows_ + i] = entries_[i * cols_ + j];
    }
  }
  return CostMatrix(cols_, rows_, std::move(t));
}

CostMatrix pairwise_costs(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::Dim, "point sets have dimensionality " + std::to_string(u.dim()) +
                                    " and " + std::to_string(v.dim()));
  }
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<double> entries(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = u.point(i);
    for (std::size_t j = 0; j < m; ++j) {
      const auto y = v.point(j);
      double sq = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const double diff = x[k] - y[k];
        sq += diff * diff;
      }
      entries[i * m + j] = std::sqrt(sq);
    }
  }
  return CostMatrix(n, m, std::move(entries));
}

} // namespace wass
