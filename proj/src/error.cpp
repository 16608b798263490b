#include "djkm/error.hpp"

namespace djkm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivZero: return "DIV_ZERO";
    case ErrorCode::NonDivisible: return "NON_DIVISIBLE";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::ResidueNonzero: return "RESIDUE_NONZERO";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::Nonconvergence: return "NONCONVERGENCE";
    case ErrorCode::UnsupportedPair: return "UNSUPPORTED_PAIR";
    case ErrorCode::Parse: return "PARSE";
  }
  return "UNKNOWN";
}

}  // namespace djkm
