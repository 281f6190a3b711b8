#include "wass/error.hpp"

namespace wass {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::Shape: return "E_SHAPE";
  case ErrorCode::Dim: return "E_DIM";
  case ErrorCode::WeightLength: return "E_WEIGHT_LEN";
  case ErrorCode::WeightNegative: return "E_WEIGHT_NEG";
  case ErrorCode::WeightSum: return "E_WEIGHT_SUM";
  case ErrorCode::MassMismatch: return "E_MASS_MISMATCH";
  case ErrorCode::TooLarge: return "E_TOO_LARGE";
  case ErrorCode::DualityGap: return "E_DUALITY_GAP";
  case ErrorCode::IterLimit: return "E_ITER_LIMIT";
  }
  return "E_UNKNOWN";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::Shape:
  case ErrorCode::Dim:
  case ErrorCode::WeightLength:
  case ErrorCode::WeightNegative:
  case ErrorCode::WeightSum:
    return true;
  default:
    return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

} // namespace wass
