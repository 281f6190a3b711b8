#include "wass/transport_lp.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "wass/error.hpp"

namespace wass {

double TransportPlan::cost(const CostMatrix& costs) const {
  double total = 0.0;
  for (const auto& f : flows) {
    total += f.mass * costs(f.source, f.target);
  }
  return total;
}

std::vector<double> TransportPlan::source_marginal(std::size_t n) const {
  std::vector<double> sums(n, 0.0);
  for (const auto& f : flows) {
    sums.at(f.source) += f.mass;
  }
  return sums;
}

std::vector<double> TransportPlan::target_marginal(std::size_t m) const {
  std::vector<double> sums(m, 0.0);
  for (const auto& f : flows) {
    sums.at(f.target) += f.mass;
  }
  return sums;
}

TransportProblem build_problem(CostMatrix cost, std::vector<double> supply,
                               std::vector<double> demand) {
  if (supply.size() != cost.rows() || demand.size() != cost.cols()) {
    throw Error(ErrorCode::Shape, "marginals of length " + std::to_string(supply.size()) + " and " +
                                      std::to_string(demand.size()) + " do not fit a " +
                                      std::to_string(cost.rows()) + "x" +
                                      std::to_string(cost.cols()) + " cost matrix");
  }
  const double total_supply = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (!(std::abs(total_supply - total_demand) <= 1e-10)) {
    throw Error(ErrorCode::MassMismatch, "total supply " + std::to_string(total_supply) +
                                             " differs from total demand " +
                                             std::to_string(total_demand));
  }
  return TransportProblem(std::move(cost), std::move(supply), std::move(demand));
}

DenseConstraints materialize_constraints(const TransportProblem& problem,
                                         std::size_t max_variables) {
  const std::size_t n = problem.sources();
  const std::size_t m = problem.targets();
  if (problem.variables() > max_variables) {
    throw Error(ErrorCode::TooLarge, std::to_string(problem.variables()) +
                                         " variables exceed the materialization cap of " +
                                         std::to_string(max_variables));
  }
  DenseConstraints a;
  a.rows = n + m;
  a.cols = n * m;
  a.entries.assign(a.rows * a.cols, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = problem.variable_index(i, j);
      a.entries[i * a.cols + k] = 1;
      a.entries[(n + j) * a.cols + k] = 1;
    }
  }
  a.rhs.assign(problem.supply().begin(), problem.supply().end());
  a.rhs.insert(a.rhs.end(), problem.demand().begin(), problem.demand().end());
  return a;
}

double dual_objective(const TransportProblem& problem, const TransportSolution& solution) {
  const auto supply = problem.supply();
  const auto demand = problem.demand();
  if (solution.dual.size() != supply.size() + demand.size()) {
    throw Error(ErrorCode::Shape, "dual vector length does not match the constraint count");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < supply.size(); ++i) {
    total += supply[i] * solution.dual[i];
  }
  for (std::size_t j = 0; j < demand.size(); ++j) {
    total += demand[j] * solution.dual[supply.size() + j];
  }
  return total;
}

double solution_distance(const TransportProblem& problem, const TransportSolution& solution) {
  const double dual = dual_objective(problem, solution);
  const double gap = std::abs(dual - solution.objective);
  if (!(gap <= kDualityGapTolerance)) {
    throw Error(ErrorCode::DualityGap, "primal " + std::to_string(solution.objective) +
                                           " and dual " + std::to_string(dual) +
                                           " objectives disagree by " + std::to_string(gap));
  }
  return dual;
}

} // namespace wass
