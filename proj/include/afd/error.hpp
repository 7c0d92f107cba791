#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace afd {

/// Stable machine-readable failure codes. The spelling returned by
/// `code_name` is part of the report format and must not change.
enum class ErrorCode {
  ContextMismatch,
  DivisionByZero,
  NotDivisible,
  UnknownVariable,
  IncompleteBindings,
  TargetDivisionByZero,
  SyntaxError,
  UnknownIdentifier,
  InvalidContext,
  UnsupportedTower,
  NotSeparable,
  Reducible,
  DescriptorMismatch,
  SingularBasis,
  SlotOutOfRange,
  ArityMismatch,
  NotSymmetric,
  Degenerate,
  NotInvertibleInAlgebra,
  NonConstantCoupling,
  RelationNotPreserved,
  MissingImage,
  PullbackVerificationFailed,
  NoAntiderivative,
  FileNotFound,
  ParseError,
  ValidationError,
  UsageError,
};

std::string_view code_name(ErrorCode code);

/// True for codes that describe malformed input rather than a mathematical
/// failure; the CLI maps these to exit status 1.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace afd
