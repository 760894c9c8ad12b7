#include "yangian/error.hpp"

namespace yangian {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::unsupported_region: return "unsupported-region";
    case ErrorCode::pole_at_point: return "pole-at-point";
    case ErrorCode::indefinite_parity: return "indefinite-parity";
    case ErrorCode::leg_mismatch: return "leg-mismatch";
    case ErrorCode::wrong_half: return "wrong-half";
    case ErrorCode::non_unit_leading: return "non-unit-leading";
    case ErrorCode::non_invertible: return "non-invertible";
    case ErrorCode::floor_too_shallow: return "floor-too-shallow";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::mode_out_of_window: return "mode-out-of-window";
    case ErrorCode::config_invalid: return "config-invalid";
    case ErrorCode::not_scalar: return "not-scalar";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace yangian
