#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "wass/distribution.hpp"
#include "wass/simplex.hpp"
#include "wass/transport_lp.hpp"

namespace wass {

/// Extended non-negative real: a finite value, +infinity, or undefined.
class Distance {
public:
  enum class Kind { Finite, Infinite, Undefined };

  static Distance finite(double value) { return Distance(Kind::Finite, value); }
  static Distance infinite() { return Distance(Kind::Infinite, 0.0); }
  static Distance undefined() { return Distance(Kind::Undefined, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }

  /// The value as a plain double: +inf for Infinite, quiet NaN for Undefined.
  double as_double() const noexcept;

private:
  Distance(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

enum class SolverPath { Cdf1d, LinearProgram };

struct Diagnostics {
  SolverPath path = SolverPath::LinearProgram;
  std::size_t iterations = 0;
  std::int64_t wall_time_ns = 0;
};

struct DistanceOptions {
  /// Attach the optimal plan to finite results.
  bool want_plan = false;
  /// Attach the full LP solution (plan and dual potentials) on the LP path.
  bool keep_solution = false;
  SolverOptions solver;
};

struct DistanceResult {
  Distance distance = Distance::undefined();
  std::optional<TransportPlan> plan;
  std::optional<TransportSolution> solution;
  Diagnostics diagnostics;
};

/// Wasserstein-1 distance between two weighted point sets under the
/// Euclidean ground metric.
///
/// Both value arrays must have the same rank. Two flat arrays go through the
/// closed-form CDF integral; two matrices (including n x 1) go through the
/// transportation LP. Weights default to uniform and are normalized to total
/// mass one. Non-finite coordinates short-circuit to Infinite or Undefined
/// as described for classify_finiteness().
///
/// Throws Error with E_SHAPE, E_DIM or E_WEIGHT_* on invalid input, and with
/// E_DUALITY_GAP or E_ITER_LIMIT if the solver fails.
DistanceResult wasserstein_distance(const ValueArray& u_values, const ValueArray& v_values,
                                    std::optional<std::span<const double>> u_weights = std::nullopt,
                                    std::optional<std::span<const double>> v_weights = std::nullopt,
                                    const DistanceOptions& options = {});

} // namespace wass
