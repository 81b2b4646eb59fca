#include "bcg/error.hpp"

namespace bcg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::UnterminatedAngleName: return "UnterminatedAngleName";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateLhs: return "DuplicateLhs";
    case ErrorCode::UnknownTerminal: return "UnknownTerminal";
    case ErrorCode::NotDeterministic: return "NotDeterministic";
    case ErrorCode::NonProductive: return "NonProductive";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::IllegalCommonStyle: return "IllegalCommonStyle";
    case ErrorCode::NonPositiveSize: return "NonPositiveSize";
    case ErrorCode::NoAdmissibleModel: return "NoAdmissibleModel";
    case ErrorCode::AssignmentMismatch: return "AssignmentMismatch";
    case ErrorCode::DegeneratePlan: return "DegeneratePlan";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::MissingMapping: return "MissingMapping";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace bcg
