#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cacti {

/// Error categories reported by the library. Values are part of the
/// public contract: the CLI maps every one of them to exit code 2.
enum class Errc {
  InvalidParameter,
  SumMismatch,
  NegativeLength,
  NonPositive,
  AllZero,
  NonIntegralP,
  ColorBoundViolation,
  RowSumMismatch,
  IsolatedDegreeZero,
  SyntaxError,
  DuplicateDegree,
  ColorOutOfRange,
  ColorRequired,
  ColorForbidden,
  STooSmall,
  NonPositiveP,
  CoherenceViolation,
  BudgetExceeded,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::NegativeLength: return "NegativeLength";
    case Errc::NonPositive: return "NonPositive";
    case Errc::AllZero: return "AllZero";
    case Errc::NonIntegralP: return "NonIntegralP";
    case Errc::ColorBoundViolation: return "ColorBoundViolation";
    case Errc::RowSumMismatch: return "RowSumMismatch";
    case Errc::IsolatedDegreeZero: return "IsolatedDegreeZero";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateDegree: return "DuplicateDegree";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::ColorRequired: return "ColorRequired";
    case Errc::ColorForbidden: return "ColorForbidden";
    case Errc::STooSmall: return "STooSmall";
    case Errc::NonPositiveP: return "NonPositiveP";
    case Errc::CoherenceViolation: return "CoherenceViolation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cacti
