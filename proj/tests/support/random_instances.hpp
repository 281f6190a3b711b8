#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "wass/distribution.hpp"

namespace wass::testing {

using Rng = std::mt19937_64;

/// Row-major n x d block of coordinates uniform in [lo, hi).
std::vector<double> random_coords(Rng& rng, std::size_t n, std::size_t d, double lo = -5.0,
                                  double hi = 5.0);

/// Positive weights in [0.05, 2).
std::vector<double> random_weights(Rng& rng, std::size_t n);

/// Random orthogonal d x d matrix (Gram-Schmidt on a Gaussian matrix), row-major.
std::vector<double> random_orthogonal(Rng& rng, std::size_t d);

/// Applies a d x d matrix to every row of a row-major point block.
std::vector<double> transform_rows(const std::vector<double>& coords, std::size_t d,
                                   const std::vector<double>& q);

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi);

} // namespace wass::testing
