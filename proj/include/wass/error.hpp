#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wass {

enum class ErrorCode {
  Shape,          // E_SHAPE: more than two axes, ragged rows, or an empty point set
  Dim,            // E_DIM: the two point sets disagree on dimensionality
  WeightLength,   // E_WEIGHT_LEN
  WeightNegative, // E_WEIGHT_NEG
  WeightSum,      // E_WEIGHT_SUM: weight total is zero, negative or non-finite
  MassMismatch,   // E_MASS_MISMATCH
  TooLarge,       // E_TOO_LARGE
  DualityGap,     // E_DUALITY_GAP
  IterLimit,      // E_ITER_LIMIT
};

/// Stable identifier used in messages and by the CLI, e.g. "E_DIM".
std::string_view code_name(ErrorCode code) noexcept;

/// True for errors caused by the caller's input rather than by the solver.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace wass
