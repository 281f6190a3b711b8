#include "wass/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wass/error.hpp"

namespace wass {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Spanning-tree basis over n + m nodes: sources are nodes 0..n-1, targets are
// nodes n..n+m-1. Every basic cell is an edge between its source and target.
class TreeBasis {
public:
  TreeBasis(const TransportProblem& problem, std::vector<BasicCell> cells)
      : cost_(problem.cost()), n_(problem.sources()), m_(problem.targets()),
        cells_(std::move(cells)), incident_(n_ + m_), parent_node_(n_ + m_),
        parent_cell_(n_ + m_), depth_(n_ + m_), potential_(n_ + m_) {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      attach(c);
    }
    order_.reserve(n_ + m_);
    update_tree();
  }

  const std::vector<BasicCell>& cells() const noexcept { return cells_; }
  double row_potential(std::size_t i) const noexcept { return potential_[i]; }
  double col_potential(std::size_t j) const noexcept { return potential_[n_ + j]; }

  double objective() const {
    double total = 0.0;
    for (const auto& c : cells_) {
      total += c.flow * cost_(c.source, c.target);
    }
    return total;
  }

  // Re-roots the tree at source 0 and recomputes all potentials from scratch,
  // so rounding never accumulates across pivots.
  void update_tree() {
    std::fill(parent_node_.begin(), parent_node_.end(), kNone);
    order_.clear();
    order_.push_back(0);
    parent_node_[0] = 0;
    parent_cell_[0] = kNone;
    depth_[0] = 0;
    potential_[0] = 0.0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const std::size_t node = order_[head];
      for (std::size_t c : incident_[node]) {
        const auto& cell = cells_[c];
        const std::size_t other = node < n_ ? n_ + cell.target : cell.source;
        if (parent_node_[other] != kNone) {
          continue;
        }
        parent_node_[other] = node;
        parent_cell_[other] = c;
        depth_[other] = depth_[node] + 1;
        potential_[other] = cost_(cell.source, cell.target) - potential_[node];
        order_.push_back(other);
      }
    }
    if (order_.size() != n_ + m_) {
      throw Error(ErrorCode::Shape, "basis is not a spanning tree");
    }
  }

  // Cells on the tree path from target j to source i, starting at the target.
  // Together with the entering cell (i, j) they form the pivot cycle; the
  // path cell at even position loses mass, at odd position gains it.
  void cycle_path(std::size_t i, std::size_t j, std::vector<std::size_t>& path) {
    path.clear();
    tail_.clear();
    std::size_t a = n_ + j;
    std::size_t b = i;
    while (depth_[a] > depth_[b]) {
      path.push_back(parent_cell_[a]);
      a = parent_node_[a];
    }
    while (depth_[b] > depth_[a]) {
      tail_.push_back(parent_cell_[b]);
      b = parent_node_[b];
    }
    while (a != b) {
      path.push_back(parent_cell_[a]);
      a = parent_node_[a];
      tail_.push_back(parent_cell_[b]);
      b = parent_node_[b];
    }
    path.insert(path.end(), tail_.rbegin(), tail_.rend());
  }

  // Replaces cell `leaving` with (i, j) after shifting `step` around the cycle.
  void pivot(std::size_t i, std::size_t j, std::size_t leaving,
             const std::vector<std::size_t>& path, double step) {
    for (std::size_t p = 0; p < path.size(); ++p) {
      auto& flow = cells_[path[p]].flow;
      flow = p % 2 == 0 ? flow - step : flow + step;
    }
    detach(leaving);
    cells_[leaving] = BasicCell{i, j, step};
    attach(leaving);
  }

private:
  void attach(std::size_t c) {
    incident_[cells_[c].source].push_back(c);
    incident_[n_ + cells_[c].target].push_back(c);
  }

  void detach(std::size_t c) {
    for (std::size_t node : {cells_[c].source, n_ + cells_[c].target}) {
      auto& list = incident_[node];
      list.erase(std::find(list.begin(), list.end(), c));
    }
  }

  const CostMatrix& cost_;
  std::size_t n_;
  std::size_t m_;
  std::vector<BasicCell> cells_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> parent_node_;
  std::vector<std::size_t> parent_cell_;
  std::vector<std::size_t> depth_;
  std::vector<double> potential_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> tail_;
};

struct Entering {
  std::size_t source = kNone;
  std::size_t target = kNone;
  double reduced_cost = 0.0;
};

Entering price(const CostMatrix& cost, const TreeBasis& tree, PricingRule rule, double tolerance) {
  Entering best;
  const std::size_t n = cost.rows();
  const std::size_t m = cost.cols();
  std::vector<double> beta(m);
  for (std::size_t j = 0; j < m; ++j) {
    beta[j] = tree.col_potential(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = tree.row_potential(i);
    const auto row = cost.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      const double rc = row[j] - alpha - beta[j];
      if (rc < -tolerance && rc < best.reduced_cost) {
        best = {i, j, rc};
        if (rule == PricingRule::Bland) {
          return best;
        }
      }
    }
  }
  return best;
}

} // namespace

BasisState initial_basis(const TransportProblem& problem) {
  const std::size_t n = problem.sources();
  const std::size_t m = problem.targets();
  std::vector<double> supply(problem.supply().begin(), problem.supply().end());
  std::vector<double> demand(problem.demand().begin(), problem.demand().end());

  BasisState basis;
  basis.cells.reserve(n + m - 1);
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i == n - 1 && j == m - 1) {
      basis.cells.push_back({i, j, std::max(0.0, std::min(supply[i], demand[j]))});
      break;
    }
    // On the last row or column the remaining cells are forced.
    if (i == n - 1 || (j < m - 1 && demand[j] < supply[i])) {
      basis.cells.push_back({i, j, demand[j]});
      supply[i] -= demand[j];
      ++j;
    } else {
      const double moved = j == m - 1 ? supply[i] : std::min(supply[i], demand[j]);
      basis.cells.push_back({i, j, moved});
      demand[j] = std::max(0.0, demand[j] - moved);
      ++i;
    }
  }

  TreeBasis tree(problem, basis.cells);
  basis.row_potential.resize(n);
  basis.col_potential.resize(m);
  for (std::size_t r = 0; r < n; ++r) {
    basis.row_potential[r] = tree.row_potential(r);
  }
  for (std::size_t c = 0; c < m; ++c) {
    basis.col_potential[c] = tree.col_potential(c);
  }
  return basis;
}

std::size_t pivot_limit(std::size_t sources, std::size_t targets) {
  const double nodes = static_cast<double>(sources + targets);
  return static_cast<std::size_t>(50.0 * nodes * std::log2(nodes)) + 1000;
}

TransportSolution solve(const TransportProblem& problem, const SolverOptions& options) {
  const CostMatrix& cost = problem.cost();
  const std::size_t n = problem.sources();
  const std::size_t m = problem.targets();
  const std::size_t limit = options.max_pivots.value_or(pivot_limit(n, m));

  TreeBasis tree(problem, initial_basis(problem).cells);
  std::vector<std::size_t> path;
  std::size_t pivots = 0;
  std::size_t degenerate_run = 0;

  while (true) {
    const PricingRule rule = degenerate_run >= options.bland_after_degenerate
                                 ? PricingRule::Bland
                                 : PricingRule::Dantzig;
    const Entering in = price(cost, tree, rule, options.optimality_tolerance);
    if (in.source == kNone) {
      break;
    }
    if (pivots == limit) {
      throw Error(ErrorCode::IterLimit,
                  "no optimum after " + std::to_string(limit) + " pivots");
    }

    tree.cycle_path(in.source, in.target, path);
    const auto& cells = tree.cells();
    std::size_t leaving = kNone;
    for (std::size_t p = 0; p < path.size(); p += 2) {
      const std::size_t c = path[p];
      if (leaving == kNone || cells[c].flow < cells[leaving].flow) {
        leaving = c;
      } else if (cells[c].flow == cells[leaving].flow) {
        const auto key = [m](const BasicCell& b) { return b.source * m + b.target; };
        if (key(cells[c]) < key(cells[leaving])) {
          leaving = c;
        }
      }
    }
    const double step = cells[leaving].flow;
    const BasicCell out = cells[leaving];

    tree.pivot(in.source, in.target, leaving, path, step);
    tree.update_tree();
    ++pivots;
    degenerate_run = step == 0.0 ? degenerate_run + 1 : 0;

    if (options.on_pivot) {
      options.on_pivot(PivotEvent{pivots, in.source, in.target, out.source, out.target,
                                  in.reduced_cost, step, tree.objective(), rule});
    }
  }

  TransportSolution solution;
  solution.iterations = pivots;
  solution.status = SolveStatus::Optimal;
  solution.objective = tree.objective();
  for (const auto& c : tree.cells()) {
    if (c.flow > 0.0) {
      solution.plan.flows.push_back({c.source, c.target, c.flow});
    }
  }
  std::sort(solution.plan.flows.begin(), solution.plan.flows.end(),
            [](const Flow& a, const Flow& b) {
              return a.source != b.source ? a.source < b.source : a.target < b.target;
            });
  solution.dual.resize(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    solution.dual[i] = tree.row_potential(i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    solution.dual[n + j] = tree.col_potential(j);
  }
  return solution;
}

} // namespace wass
