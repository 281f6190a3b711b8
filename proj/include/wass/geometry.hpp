#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wass/distribution.hpp"

namespace wass {

/// Dense n x m matrix of ground distances, row-major.
class CostMatrix {
public:
  CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const double> entries() const noexcept { return entries_; }

  CostMatrix transposed() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// Euclidean distance between every point of u and every point of v.
/// Throws E_DIM when the dimensionalities differ. No overflow guard: squared
/// coordinate differences beyond ~1e154 saturate to infinity.
CostMatrix pairwise_costs(const DiscreteDistribution& u, const DiscreteDistribution& v);

} // namespace wass
