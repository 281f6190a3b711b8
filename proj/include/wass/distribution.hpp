#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wass {

/// Caller-supplied array of reals: a shape and its row-major data.
///
/// Point sets are either flat (one axis, each element a scalar observation)
/// or matrices (two axes, each row one observation). Other ranks can be
/// represented so that validation can reject them with E_SHAPE.
class ValueArray {
public:
  /// One-axis array of scalar observations.
  static ValueArray flat(std::vector<double> values);

  /// Two-axis array, one row per observation. Throws E_SHAPE on ragged rows.
  static ValueArray rows(const std::vector<std::vector<double>>& rows);

  /// Two-axis array from row-major data.
  static ValueArray matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  /// Arbitrary-rank array from row-major data.
  static ValueArray tensor(std::vector<std::size_t> shape, std::vector<double> data);

  std::size_t rank() const noexcept { return shape_.size(); }
  std::span<const std::size_t> shape() const noexcept { return shape_; }
  std::span<const double> data() const noexcept { return data_; }

private:
  ValueArray(std::vector<std::size_t> shape, std::vector<double> data);

  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// n weighted points in d dimensions. Construct through validate().
class DiscreteDistribution {
public:
  std::size_t size() const noexcept { return weights_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> point(std::size_t i) const noexcept {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  /// All coordinates, row-major n x d.
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Set once the weights have been scaled onto the probability simplex.
  bool normalized() const noexcept { return normalized_; }

private:
  DiscreteDistribution(std::size_t dim, std::vector<double> coords, std::vector<double> weights,
                       bool normalized)
      : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)),
        normalized_(normalized) {}

  friend DiscreteDistribution validate(const ValueArray&, std::optional<std::span<const double>>);
  friend DiscreteDistribution normalize(const DiscreteDistribution&);

  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
  bool normalized_;
};

/// Checks shape and weights and builds a distribution. Flat input becomes
/// n x 1. Missing weights are synthesized as all ones.
///
/// Throws Error with E_SHAPE, E_WEIGHT_LEN, E_WEIGHT_NEG or E_WEIGHT_SUM.
DiscreteDistribution validate(const ValueArray& points,
                              std::optional<std::span<const double>> weights = std::nullopt);

/// Scales weights to sum to one. Idempotent: an already normalized
/// distribution is returned unchanged.
DiscreteDistribution normalize(const DiscreteDistribution& dist);

enum class Finiteness { Finite, Infinite, Undefined };

/// Undefined when any coordinate is NaN or both sides hold an infinite
/// coordinate; Infinite when exactly one side does; Finite otherwise.
Finiteness classify_finiteness(const DiscreteDistribution& u, const DiscreteDistribution& v);

} // namespace wass
