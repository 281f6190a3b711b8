#include "wass/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "wass/error.hpp"

namespace wass {

ValueArray::ValueArray(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {}

ValueArray ValueArray::flat(std::vector<double> values) {
  const std::size_t n = values.size();
  return ValueArray({n}, std::move(values));
}

ValueArray ValueArray::rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::Shape, "row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " columns, expected " +
                                        std::to_string(cols));
    }
    data.insert(data.end(), rows[r].begin(), rows[r].end());
  }
  return ValueArray({rows.size(), cols}, std::move(data));
}

ValueArray ValueArray::matrix(std::size_t rows, std::size_t cols, std::vector<double> data) {
  return tensor({rows, cols}, std::move(data));
}

ValueArray ValueArray::tensor(std::vector<std::size_t> shape, std::vector<double> data) {
  const std::size_t count =
      std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  if (count != data.size()) {
    throw Error(ErrorCode::Shape, "shape holds " + std::to_string(count) + " elements but " +
                                      std::to_string(data.size()) + " were given");
  }
  return ValueArray(std::move(shape), std::move(data));
}

DiscreteDistribution validate(const ValueArray& points,
                              std::optional<std::span<const double>> weights) {
  if (points.rank() == 0 || points.rank() > 2) {
    throw Error(ErrorCode::Shape, "point arrays must have one or two axes, got " +
                                      std::to_string(points.rank()));
  }
  const std::size_t n = points.shape()[0];
  const std::size_t d = points.rank() == 2 ? points.shape()[1] : 1;
  if (n == 0 || d == 0) {
    throw Error(ErrorCode::Shape, "point array is empty");
  }

  std::vector<double> w;
  if (weights) {
    if (weights->size() != n) {
      throw Error(ErrorCode::WeightLength, "got " + std::to_string(weights->size()) +
                                               " weights for " + std::to_string(n) + " points");
    }
    w.assign(weights->begin(), weights->end());
    if (std::any_of(w.begin(), w.end(), [](double x) { return x < 0.0; })) {
      throw Error(ErrorCode::WeightNegative, "weights must be non-negative");
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (!std::isfinite(total) || total <= 0.0) {
      throw Error(ErrorCode::WeightSum, "weight sum must be positive and finite");
    }
  } else {
    w.assign(n, 1.0);
  }

  auto data = points.data();
  return DiscreteDistribution(d, std::vector<double>(data.begin(), data.end()), std::move(w),
                              false);
}

DiscreteDistribution normalize(const DiscreteDistribution& dist) {
  if (dist.normalized()) {
    return dist;
  }
  const auto w = dist.weights();
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> scaled(w.size());
  std::transform(w.begin(), w.end(), scaled.begin(), [total](double x) { return x / total; });
  return DiscreteDistribution(dist.dim(), dist.coords_, std::move(scaled), true);
}

namespace {

struct SpecialValues {
  bool any_nan = false;
  bool any_inf = false;
};

SpecialValues scan(const DiscreteDistribution& dist) {
  SpecialValues s;
  for (double x : dist.coords()) {
    s.any_nan = s.any_nan || std::isnan(x);
    s.any_inf = s.any_inf || std::isinf(x);
  }
  return s;
}

} // namespace

Finiteness classify_finiteness(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  const auto su = scan(u);
  const auto sv = scan(v);
  if (su.any_nan || sv.any_nan || (su.any_inf && sv.any_inf)) {
    return Finiteness::Undefined;
  }
  if (su.any_inf || sv.any_inf) {
    return Finiteness::Infinite;
  }
  return Finiteness::Finite;
}

} // namespace wass
