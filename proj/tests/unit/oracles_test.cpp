// Sanity checks for the reference oracles themselves on hand-solvable cases.

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace wass::testing {
namespace {

TEST(BruteForceAssignment, KnownMinimum) {
  // Rows prefer columns 2, 0, 1 respectively.
  const CostMatrix c(3, 3, {5, 4, 1, 1, 6, 7, 8, 2, 9});
  EXPECT_DOUBLE_EQ(brute_force_assignment(c), 4.0);
}

TEST(MatrixRank, SmallCases) {
  EXPECT_EQ(matrix_rank({1, 2, 2, 4}, 2, 2), 1u);
  EXPECT_EQ(matrix_rank({1, 0, 0, 1}, 2, 2), 2u);
  EXPECT_EQ(matrix_rank({0, 0, 0}, 1, 3), 0u);
}

TEST(DenseLp, TinyTransport) {
  // Supplies (0.5, 0.5), demands (0.5, 0.5), costs favor the diagonal.
  const std::vector<double> a{1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1};
  EXPECT_NEAR(dense_lp_minimum(a, 4, 4, {0.5, 0.5, 0.5, 0.5}, {1, 3, 3, 2}), 1.5, 1e-12);
}

TEST(DenseLp, InequalityViaSlack) {
  // min -x - y  s.t. x + s1 = 1, y + s2 = 2  ->  -3
  const std::vector<double> a{1, 0, 1, 0, 0, 1, 0, 1};
  EXPECT_NEAR(dense_lp_minimum(a, 2, 4, {1, 2}, {-1, -1, 0, 0}), -3.0, 1e-12);
}

} // namespace
} // namespace wass::testing
