#include "afd/error.hpp"

namespace afd {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::IncompleteBindings: return "IncompleteBindings";
    case ErrorCode::TargetDivisionByZero: return "TargetDivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::UnsupportedTower: return "UnsupportedTower";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotInvertibleInAlgebra: return "NotInvertibleInAlgebra";
    case ErrorCode::NonConstantCoupling: return "NonConstantCoupling";
    case ErrorCode::RelationNotPreserved: return "RelationNotPreserved";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::PullbackVerificationFailed: return "PullbackVerificationFailed";
    case ErrorCode::NoAntiderivative: return "NoAntiderivative";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::InvalidContext:
    case ErrorCode::FileNotFound:
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::UsageError:
      return true;
    default:
      return false;
  }
}

}  // namespace afd
