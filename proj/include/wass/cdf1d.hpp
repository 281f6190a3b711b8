#pragma once

#include <vector>

#include "wass/distribution.hpp"
#include "wass/transport_lp.hpp"

namespace wass {

/// Union of two 1D supports with both step CDFs evaluated on it.
struct MergedSupport {
  std::vector<double> positions; // strictly increasing
  std::vector<double> u_cdf;     // U(positions[k]), mass at or left of the position
  std::vector<double> v_cdf;
};

/// Requires finite one-dimensional distributions (E_DIM otherwise). Weights
/// are scaled by their totals, so unnormalized input is accepted.
MergedSupport merge_supports(const DiscreteDistribution& u, const DiscreteDistribution& v);

/// Area between the two CDFs: sum of |U - V| times the gap to the next
/// merged position.
double cdf_distance_1d(const DiscreteDistribution& u, const DiscreteDistribution& v);

/// Monotone plan: walk both supports in ascending order and move as much of
/// the current source mass as the current target still needs. Indices in the
/// result refer to the original point order.
TransportPlan greedy_plan_1d(const DiscreteDistribution& u, const DiscreteDistribution& v);

} // namespace wass
