#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmint {

// Failure categories. The CLI maps the category (not the code) to an exit status.
enum class Errc {
  // input errors
  InvalidArgument,
  BadRealDiscriminant,
  NotTotallyImaginary,
  NotPrimitive,
  HalfIntegerDiscriminant,
  BadQuadDiscriminant,
  OutOfRange,
  PreconditionViolated,
  // hypothesis violations
  IndexHypothesisViolated,
  // internal invariant failures
  IntegralityViolation,
  SymbolMismatch,
  AmbiguousSelection,
};

enum class ErrorCategory { Input, Hypothesis, Internal };

constexpr ErrorCategory category_of(Errc code) {
  switch (code) {
    case Errc::IndexHypothesisViolated:
      return ErrorCategory::Hypothesis;
    case Errc::IntegralityViolation:
    case Errc::SymbolMismatch:
    case Errc::AmbiguousSelection:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Input;
  }
}

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BadRealDiscriminant: return "BadRealDiscriminant";
    case Errc::NotTotallyImaginary: return "NotTotallyImaginary";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::HalfIntegerDiscriminant: return "HalfIntegerDiscriminant";
    case Errc::BadQuadDiscriminant: return "BadQuadDiscriminant";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::IndexHypothesisViolated: return "IndexHypothesisViolated";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::SymbolMismatch: return "SymbolMismatch";
    case Errc::AmbiguousSelection: return "AmbiguousSelection";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace cmint
