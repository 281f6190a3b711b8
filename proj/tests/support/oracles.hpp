#pragma once

// Reference computations used to check the library. None of these share code
// with the production solver path.

#include <cstddef>
#include <span>
#include <vector>

#include "wass/geometry.hpp"
#include "wass/transport_lp.hpp"

namespace wass::testing {

/// Minimum of sum_i cost(i, sigma(i)) over all permutations (square costs).
double brute_force_assignment(const CostMatrix& cost);

/// Euclidean norm computed directly, for cross-checking cost matrices.
double euclidean(std::span<const double> a, std::span<const double> b);

/// Rank by Gaussian elimination with partial pivoting.
std::size_t matrix_rank(std::vector<double> entries, std::size_t rows, std::size_t cols,
                        double tolerance = 1e-9);

/// Two-phase dense tableau simplex with Bland's rule for
/// min c^T x s.t. A x = b, x >= 0, b >= 0. Returns the optimal objective.
double dense_lp_minimum(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                        const std::vector<double>& b, const std::vector<double>& c);

struct Certificate {
  double min_reduced_cost;    // min over all cells of c_ij - y_i - y_{n+j}
  double max_marginal_error;  // max |row/column sum - supply/demand|
  double min_flow;            // smallest listed plan mass
  double duality_gap;         // |b^T y - sum mass * cost|
  double objective_error;     // |reported objective - sum mass * cost|
};

/// Recomputes optimality evidence for `solution` from the problem data.
Certificate certify(const TransportProblem& problem, const TransportSolution& solution);

/// Dual feasibility 1e-9, primal feasibility 1e-9, gap 1e-8.
bool certificate_ok(const Certificate& c);

} // namespace wass::testing
