#pragma once

#include <stdexcept>
#include <string>

namespace djkm {

enum class ErrorCode {
  DivZero,
  NonDivisible,
  NotSquare,
  ResidueNonzero,
  DivisionByZero,
  NoConvergence,
  Nonconvergence,
  UnsupportedPair,
  Parse,
};

/// Stable upper-case name used in reports and JSON, e.g. "NON_DIVISIBLE".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace djkm
