#include "wass/cdf1d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wass/error.hpp"

namespace wass {

namespace {

void require_1d(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  if (u.dim() != 1 || v.dim() != 1) {
    throw Error(ErrorCode::Dim, "the CDF path needs one-dimensional point sets");
  }
}

// Stable ascending order of point indices by position.
std::vector<std::size_t> sorted_order(const DiscreteDistribution& dist) {
  std::vector<std::size_t> order(dist.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto x = dist.coords();
  std::stable_sort(order.begin(), order.end(),
                   [x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

double total_weight(const DiscreteDistribution& dist) {
  const auto w = dist.weights();
  return std::accumulate(w.begin(), w.end(), 0.0);
}

} // namespace

MergedSupport merge_supports(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  require_1d(u, v);
  const auto ux = u.coords();
  const auto vx = v.coords();
  const auto uw = u.weights();
  const auto vw = v.weights();
  const auto uo = sorted_order(u);
  const auto vo = sorted_order(v);
  const double u_total = total_weight(u);
  const double v_total = total_weight(v);

  MergedSupport merged;
  merged.positions.reserve(uo.size() + vo.size());
  std::size_t a = 0;
  std::size_t b = 0;
  double u_cum = 0.0;
  double v_cum = 0.0;
  while (a < uo.size() || b < vo.size()) {
    double p;
    if (b == vo.size() || (a < uo.size() && ux[uo[a]] <= vx[vo[b]])) {
      p = ux[uo[a]];
    } else {
      p = vx[vo[b]];
    }
    while (a < uo.size() && ux[uo[a]] == p) {
      u_cum += uw[uo[a++]];
    }
    while (b < vo.size() && vx[vo[b]] == p) {
      v_cum += vw[vo[b++]];
    }
    merged.positions.push_back(p);
    merged.u_cdf.push_back(u_cum / u_total);
    merged.v_cdf.push_back(v_cum / v_total);
  }
  return merged;
}

double cdf_distance_1d(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  const auto merged = merge_supports(u, v);
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < merged.positions.size(); ++k) {
    const double gap = merged.positions[k + 1] - merged.positions[k];
    area += std::abs(merged.u_cdf[k] - merged.v_cdf[k]) * gap;
  }
  return area;
}

TransportPlan greedy_plan_1d(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  require_1d(u, v);
  const auto uo = sorted_order(u);
  const auto vo = sorted_order(v);
  const double u_total = total_weight(u);
  const double v_total = total_weight(v);
  const auto uw = u.weights();
  const auto vw = v.weights();

  TransportPlan plan;
  std::size_t a = 0;
  std::size_t b = 0;
  double source_left = uw[uo[0]] / u_total;
  double target_left = vw[vo[0]] / v_total;
  while (true) {
    if (source_left <= 0.0) {
      if (++a == uo.size()) break;
      source_left = uw[uo[a]] / u_total;
      continue;
    }
    if (target_left <= 0.0) {
      if (++b == vo.size()) break;
      target_left = vw[vo[b]] / v_total;
      continue;
    }
    const double moved = std::min(source_left, target_left);
    plan.flows.push_back({uo[a], vo[b], moved});
    source_left -= moved;
    target_left -= moved;
  }
  return plan;
}

} // namespace wass
