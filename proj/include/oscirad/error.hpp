// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oscirad {

enum class Errc {
  InvalidArgument,
  OutOfRange,
  Duplicate,
  InvalidCombination,
  NonIntegerK,
  QuadratureFailure,
  DegenerateInformation,
  RegimeViolation,
  LengthMismatch,
  BudgetExceeded,
};

[[nodiscard]] constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Duplicate: return "Duplicate";
    case Errc::InvalidCombination: return "InvalidCombination";
    case Errc::NonIntegerK: return "NonIntegerK";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::DegenerateInformation: return "DegenerateInformation";
    case Errc::RegimeViolation: return "RegimeViolation";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

  /// Failures that come from numerics (budgets) rather than from bad input.
  [[nodiscard]] bool is_numerical() const noexcept {
    return code_ == Errc::QuadratureFailure || code_ == Errc::BudgetExceeded;
  }

 private:
  Errc code_;
};

}  // namespace oscirad
