#include "wass/wasserstein.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "wass/cdf1d.hpp"
#include "wass/error.hpp"
#include "wass/geometry.hpp"

namespace wass {

double Distance::as_double() const noexcept {
  switch (kind_) {
  case Kind::Finite: return value_;
  case Kind::Infinite: return std::numeric_limits<double>::infinity();
  case Kind::Undefined: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

namespace {

void check_rank(const ValueArray& values, const char* name) {
  if (values.rank() == 0 || values.rank() > 2) {
    throw Error(ErrorCode::Shape, std::string(name) + " must have one or two axes, got " +
                                      std::to_string(values.rank()));
  }
}

} // namespace

DistanceResult wasserstein_distance(const ValueArray& u_values, const ValueArray& v_values,
                                    std::optional<std::span<const double>> u_weights,
                                    std::optional<std::span<const double>> v_weights,
                                    const DistanceOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  check_rank(u_values, "u_values");
  check_rank(v_values, "v_values");
  if (u_values.rank() != v_values.rank()) {
    throw Error(ErrorCode::Dim, "u_values has " + std::to_string(u_values.rank()) +
                                    " axes but v_values has " + std::to_string(v_values.rank()));
  }
  const auto u = normalize(validate(u_values, u_weights));
  const auto v = normalize(validate(v_values, v_weights));
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::Dim, "u_values has " + std::to_string(u.dim()) +
                                    " columns but v_values has " + std::to_string(v.dim()));
  }

  DistanceResult result;
  result.diagnostics.path = u_values.rank() == 1 ? SolverPath::Cdf1d : SolverPath::LinearProgram;

  switch (classify_finiteness(u, v)) {
  case Finiteness::Infinite:
    result.distance = Distance::infinite();
    break;
  case Finiteness::Undefined:
    result.distance = Distance::undefined();
    break;
  case Finiteness::Finite:
    if (result.diagnostics.path == SolverPath::Cdf1d) {
      result.distance = Distance::finite(cdf_distance_1d(u, v));
      if (options.want_plan) {
        result.plan = greedy_plan_1d(u, v);
      }
    } else {
      const auto wu = u.weights();
      const auto wv = v.weights();
      const auto problem = build_problem(pairwise_costs(u, v), {wu.begin(), wu.end()},
                                         {wv.begin(), wv.end()});
      auto solution = solve(problem, options.solver);
      result.distance = Distance::finite(std::max(0.0, solution_distance(problem, solution)));
      result.diagnostics.iterations = solution.iterations;
      if (options.want_plan) {
        result.plan = solution.plan;
      }
      if (options.keep_solution) {
        result.solution = std::move(solution);
      }
    }
    break;
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.diagnostics.wall_time_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
  return result;
}

} // namespace wass
