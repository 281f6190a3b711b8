#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wass/transport_lp.hpp"

namespace wass {

/// One cell (i, j) of the transport array that belongs to the basis.
struct BasicCell {
  std::size_t source;
  std::size_t target;
  double flow;
};

/// A basic feasible solution of the transportation LP.
///
/// The basic cells form a spanning tree of the bipartite graph with the n
/// sources and m targets as nodes, so there are exactly n + m - 1 of them.
/// Degenerate cells carry zero flow. Potentials satisfy
/// row_potential[i] + col_potential[j] == cost(i, j) on every basic cell,
/// with row_potential[0] fixed at 0.
struct BasisState {
  std::vector<BasicCell> cells;
  std::vector<double> row_potential;
  std::vector<double> col_potential;
};

/// Northwest-corner basis. When a supply and a demand run out together the
/// walk moves down one row and records a zero-flow cell, which keeps the
/// cell set a spanning tree.
BasisState initial_basis(const TransportProblem& problem);

enum class PricingRule {
  Dantzig, // most negative reduced cost, lowest (i, j) on ties
  Bland,   // first cell in (i, j) order with negative reduced cost
};

struct PivotEvent {
  std::size_t iteration;
  std::size_t entering_source;
  std::size_t entering_target;
  std::size_t leaving_source;
  std::size_t leaving_target;
  double reduced_cost;
  double step;      // mass shifted around the cycle; zero for a degenerate pivot
  double objective; // primal objective after the pivot
  PricingRule rule;
};

struct SolverOptions {
  /// A nonbasic cell enters only if its reduced cost is below -tolerance.
  double optimality_tolerance = 1e-10;
  /// Consecutive degenerate pivots after which pricing switches to Bland's
  /// rule. Pricing returns to Dantzig after the next non-degenerate pivot.
  std::size_t bland_after_degenerate = 20;
  /// Defaults to pivot_limit(n, m).
  std::optional<std::size_t> max_pivots;
  /// Called after every pivot. Leave empty in production; computing the
  /// objective for the event costs O(n + m) per pivot.
  std::function<void(const PivotEvent&)> on_pivot;
};

/// 50 (n + m) log2(n + m) + 1000.
std::size_t pivot_limit(std::size_t sources, std::size_t targets);

/// Transportation simplex: start from initial_basis(), enter the cell with
/// the most negative reduced cost, shift mass around the unique tree cycle
/// it closes, repeat until no reduced cost is below -tolerance.
///
/// Throws E_ITER_LIMIT when the pivot budget is exhausted.
TransportSolution solve(const TransportProblem& problem, const SolverOptions& options = {});

} // namespace wass
