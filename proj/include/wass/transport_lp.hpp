#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wass/geometry.hpp"

namespace wass {

/// Mass moved from source point `source` to target point `target`.
struct Flow {
  std::size_t source;
  std::size_t target;
  double mass;

  friend bool operator==(const Flow&, const Flow&) = default;
};

/// Sparse transport plan; only cells with positive mass are listed.
struct TransportPlan {
  std::vector<Flow> flows;

  double cost(const CostMatrix& costs) const;
  std::vector<double> source_marginal(std::size_t n) const;
  std::vector<double> target_marginal(std::size_t m) const;
};

/// Balanced transportation LP: minimize sum c_ij x_ij subject to row sums
/// equal to supply and column sums equal to demand.
///
/// Variables are flattened row-major, x_k = gamma_ij with k = i * m + j.
/// The constraint matrix is never stored; materialize_constraints() expands it
/// for inspection.
class TransportProblem {
public:
  const CostMatrix& cost() const noexcept { return cost_; }
  std::span<const double> supply() const noexcept { return supply_; }
  std::span<const double> demand() const noexcept { return demand_; }

  std::size_t sources() const noexcept { return supply_.size(); }
  std::size_t targets() const noexcept { return demand_.size(); }
  std::size_t variables() const noexcept { return supply_.size() * demand_.size(); }
  std::size_t constraints() const noexcept { return supply_.size() + demand_.size(); }

  std::size_t variable_index(std::size_t i, std::size_t j) const noexcept {
    return i * demand_.size() + j;
  }

private:
  TransportProblem(CostMatrix cost, std::vector<double> supply, std::vector<double> demand)
      : cost_(std::move(cost)), supply_(std::move(supply)), demand_(std::move(demand)) {}

  friend TransportProblem build_problem(CostMatrix, std::vector<double>, std::vector<double>);

  CostMatrix cost_;
  std::vector<double> supply_;
  std::vector<double> demand_;
};

/// Throws E_MASS_MISMATCH when total supply and total demand differ by more
/// than 1e-10, and E_SHAPE when the marginals do not match the cost matrix.
TransportProblem build_problem(CostMatrix cost, std::vector<double> supply,
                               std::vector<double> demand);

/// Dense 0/1 constraint matrix A (n + m rows, n * m columns) and rhs b.
/// Rows 0..n-1 select contiguous groups of m variables (row sums); rows
/// n..n+m-1 select every m-th variable (column sums).
struct DenseConstraints {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> entries; // row-major
  std::vector<double> rhs;

  std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept {
    return entries[r * cols + c];
  }
};

inline constexpr std::size_t kDefaultMaterializationCap = 10'000;

/// Throws E_TOO_LARGE when n * m exceeds `max_variables`.
DenseConstraints materialize_constraints(const TransportProblem& problem,
                                         std::size_t max_variables = kDefaultMaterializationCap);

enum class SolveStatus { Optimal };

struct TransportSolution {
  TransportPlan plan;
  /// Row potentials followed by column potentials (length n + m), gauge y_0 = 0.
  std::vector<double> dual;
  /// Primal objective, sum of mass * cost over the plan.
  double objective = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::Optimal;
};

/// b^T y for the solution's dual vector.
double dual_objective(const TransportProblem& problem, const TransportSolution& solution);

inline constexpr double kDualityGapTolerance = 1e-8;

/// Distance recovered from the dual, b^T y. Throws E_DUALITY_GAP when it
/// disagrees with the primal objective by more than 1e-8.
double solution_distance(const TransportProblem& problem, const TransportSolution& solution);

} // namespace wass
