#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcg {

enum class ErrorCode {
  IllegalCharacter,
  UnterminatedAngleName,
  SyntaxError,
  DuplicateLhs,
  UnknownTerminal,
  NotDeterministic,
  NonProductive,
  LimitExceeded,
  MalformedTree,
  InvalidArgument,
  SchemaError,
  DuplicateId,
  IllegalCommonStyle,
  NonPositiveSize,
  NoAdmissibleModel,
  AssignmentMismatch,
  DegeneratePlan,
  CapExceeded,
  InvariantViolation,
  MissingMapping,
  UnknownModel,
  IoError,
};

std::string_view to_string(ErrorCode code);

struct SourceLocation {
  std::size_t line = 0;  // 1-based; 0 when unknown
  std::size_t column = 0;
};

/// Every failure in the library surfaces as this exception. `code()` is
/// the stable discriminator; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, SourceLocation loc = {})
      : std::runtime_error(message), code_(code), loc_(loc) {}

  ErrorCode code() const noexcept { return code_; }
  const SourceLocation& location() const noexcept { return loc_; }

  /// True for I/O and usage failures (CLI exit class 2).
  bool is_io() const noexcept { return code_ == ErrorCode::IoError; }

 private:
  ErrorCode code_;
  SourceLocation loc_;
};

}  // namespace bcg
