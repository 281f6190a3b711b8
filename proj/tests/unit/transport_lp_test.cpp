#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_instances.hpp"
#include "wass/error.hpp"
#include "wass/simplex.hpp"
#include "wass/transport_lp.hpp"

namespace wass {
namespace {

TransportProblem problem_of(const ValueArray& ux, const ValueArray& vx,
                            std::optional<std::vector<double>> uw = {},
                            std::optional<std::vector<double>> vw = {}) {
  const auto u = normalize(uw ? validate(ux, *uw) : validate(ux));
  const auto v = normalize(vw ? validate(vx, *vw) : validate(vx));
  return build_problem(pairwise_costs(u, v), {u.weights().begin(), u.weights().end()},
                       {v.weights().begin(), v.weights().end()});
}

TransportProblem zero_cost_problem(std::size_t n, std::size_t m) {
  std::vector<double> supply(n, 1.0 / static_cast<double>(n));
  std::vector<double> demand(m, 1.0 / static_cast<double>(m));
  return build_problem(CostMatrix(n, m, std::vector<double>(n * m, 0.0)), supply, demand);
}

std::vector<int> as_ints(const DenseConstraints& a) {
  return {a.entries.begin(), a.entries.end()};
}

TEST(MaterializeConstraints, TwoByTwo) {
  const auto p = build_problem(CostMatrix(2, 2, {0, 1, 1, 0}), {0.3, 0.7}, {0.4, 0.6});
  const auto a = materialize_constraints(p);
  EXPECT_EQ(a.rows, 4u);
  EXPECT_EQ(a.cols, 4u);
  EXPECT_EQ(as_ints(a), (std::vector<int>{1, 1, 0, 0,  //
                                          0, 0, 1, 1,  //
                                          1, 0, 1, 0,  //
                                          0, 1, 0, 1}));
  EXPECT_EQ(a.rhs, (std::vector<double>{0.3, 0.7, 0.4, 0.6}));
}

TEST(MaterializeConstraints, OneByThree) {
  const auto a = materialize_constraints(zero_cost_problem(1, 3));
  EXPECT_EQ(as_ints(a), (std::vector<int>{1, 1, 1,  //
                                          1, 0, 0,  //
                                          0, 1, 0,  //
                                          0, 0, 1}));
}

TEST(MaterializeConstraints, ThreeByTwoHasRankFour) {
  const auto a = materialize_constraints(zero_cost_problem(3, 2));
  EXPECT_EQ(a.rows, 5u);
  EXPECT_EQ(a.cols, 6u);
  EXPECT_EQ(testing::matrix_rank({a.entries.begin(), a.entries.end()}, a.rows, a.cols), 4u);
}

TEST(MaterializeConstraints, RowSumsTwoByThree) {
  const auto a = materialize_constraints(zero_cost_problem(2, 3));
  std::vector<int> sums(a.rows, 0);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) sums[r] += a(r, c);
  EXPECT_EQ(sums, (std::vector<int>{3, 3, 2, 2, 2}));
}

TEST(MaterializeConstraints, TwoOnesPerColumnOneInEachBlock) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto a = materialize_constraints(zero_cost_problem(n, m));
      for (std::size_t c = 0; c < a.cols; ++c) {
        int upper = 0;
        int lower = 0;
        for (std::size_t r = 0; r < n; ++r) upper += a(r, c);
        for (std::size_t r = n; r < n + m; ++r) lower += a(r, c);
        EXPECT_EQ(upper, 1);
        EXPECT_EQ(lower, 1);
      }
    }
  }
}

TEST(MaterializeConstraints, CapIsEnforced) {
  const auto p = zero_cost_problem(101, 100);
  EXPECT_NO_THROW(materialize_constraints(zero_cost_problem(100, 100)));
  try {
    materialize_constraints(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_NO_THROW(materialize_constraints(p, 20'000));
}

TEST(BuildProblem, RejectsUnbalancedMarginals) {
  try {
    build_problem(CostMatrix(1, 2, {1, 2}), {1.0}, {0.5, 0.6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MassMismatch);
  }
  EXPECT_THROW(build_problem(CostMatrix(1, 2, {1, 2}), {1.0}, {1.0}), Error);
}

TEST(SolutionDistance, PublishedValues) {
  const auto p2 = problem_of(ValueArray::rows({{0, 2, 3}, {1, 2, 5}}),
                             ValueArray::rows({{3, 2, 3}, {4, 2, 5}}));
  EXPECT_NEAR(solution_distance(p2, solve(p2)), 3.0, 3.0 * 1e-9);

  const auto p3 = problem_of(ValueArray::rows({{0, 2.75}, {2, 209.3}, {0, 0}}),
                             ValueArray::rows({{0.2, 0.322}, {4.5, 25.1808}}),
                             std::vector<double>{0.4, 5.2, 0.114}, std::vector<double>{0.8, 1.5});
  EXPECT_NEAR(solution_distance(p3, solve(p3)), 174.15840245217169, 174.15840245217169 * 1e-9);

  const auto same = ValueArray::rows({{1, 1}, {2, 5}, {-3, 0}});
  const auto p0 = problem_of(same, same);
  EXPECT_NEAR(solution_distance(p0, solve(p0)), 0.0, 1e-12);
}

TEST(SolutionDistance, DetectsDualityGap) {
  const auto p = problem_of(ValueArray::rows({{0, 0}, {1, 0}}), ValueArray::rows({{0, 1}}));
  auto s = solve(p);
  s.objective += 1e-6;
  try {
    solution_distance(p, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DualityGap);
  }
}

TEST(TransportLpProperty, ConstraintsHoldForSolverPlans) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 12);
    const std::size_t m = testing::uniform_size(rng, 1, 12);
    const std::size_t d = testing::uniform_size(rng, 1, 3);
    const auto p = problem_of(ValueArray::matrix(n, d, testing::random_coords(rng, n, d)),
                              ValueArray::matrix(m, d, testing::random_coords(rng, m, d)),
                              testing::random_weights(rng, n), testing::random_weights(rng, m));
    const auto s = solve(p);
    EXPECT_LE(s.plan.flows.size(), n + m - 1);

    const auto a = materialize_constraints(p);
    std::vector<double> x(a.cols, 0.0);
    for (const auto& f : s.plan.flows) x[p.variable_index(f.source, f.target)] = f.mass;
    for (std::size_t r = 0; r < a.rows; ++r) {
      double lhs = 0.0;
      for (std::size_t c = 0; c < a.cols; ++c) lhs += a(r, c) * x[c];
      EXPECT_NEAR(lhs, a.rhs[r], 1e-9);
    }
    EXPECT_NEAR(s.objective, s.plan.cost(p.cost()), 1e-10);
  }
}

// The constraint system has exactly one redundant row: removing any one row
// leaves the optimum unchanged.
TEST(TransportLpProperty, DroppingAnyRowKeepsTheOptimum) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 4);
    const std::size_t m = testing::uniform_size(rng, 1, 4);
    const auto p = problem_of(ValueArray::matrix(n, 2, testing::random_coords(rng, n, 2)),
                              ValueArray::matrix(m, 2, testing::random_coords(rng, m, 2)),
                              testing::random_weights(rng, n), testing::random_weights(rng, m));
    const double optimum = solve(p).objective;
    const auto a = materialize_constraints(p);
    const std::vector<double> c(p.cost().entries().begin(), p.cost().entries().end());
    for (std::size_t drop = 0; drop < a.rows; ++drop) {
      std::vector<double> rows;
      std::vector<double> rhs;
      for (std::size_t r = 0; r < a.rows; ++r) {
        if (r == drop) continue;
        for (std::size_t k = 0; k < a.cols; ++k) rows.push_back(a(r, k));
        rhs.push_back(a.rhs[r]);
      }
      EXPECT_NEAR(testing::dense_lp_minimum(rows, a.rows - 1, a.cols, rhs, c), optimum, 1e-9)
          << "n=" << n << " m=" << m << " dropped row " << drop;
    }
  }
}

} // namespace
} // namespace wass
