#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

enum class ErrorCode {
  division_by_zero,
  unsupported_region,
  pole_at_point,
  indefinite_parity,
  leg_mismatch,
  wrong_half,
  non_unit_leading,
  non_invertible,
  floor_too_shallow,
  syntax_error,
  mode_out_of_window,
  config_invalid,
  not_scalar,
};

const char* to_string(ErrorCode code);

/// Exception carrying one of the library error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace yangian
