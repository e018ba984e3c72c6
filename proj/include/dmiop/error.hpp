#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmiop {

enum class ErrorCode {
  SingularMatrix,
  NegativeRadicand,
  BadQ,
  BadN,
  BadIndexSet,
  ZeroDenominator,
  IndexOutOfRange,
  NonPositiveWeight,
  InadmissibleParams,
  DegreeMismatch,
  ZeroEntry,
  ZeroPolynomial,
  NonMonotone,
  NegativeYCoefficient,
  CrossCheckMismatch,
  ShapeMismatch,
  NegativeUnderSqrt,
  SymmetryViolation,
  SingularR0,
  NegativePivot,
  InadmissibleCandidate,
  UnknownExample,
  ConfigError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::BadQ: return "BadQ";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::NegativeYCoefficient: return "NegativeYCoefficient";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeUnderSqrt: return "NegativeUnderSqrt";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::SingularR0: return "SingularR0";
    case ErrorCode::NegativePivot: return "NegativePivot";
    case ErrorCode::InadmissibleCandidate: return "InadmissibleCandidate";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace dmiop
