#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vkc {

/// Diagnostic codes. Each failure path in the library and the CLI maps to a
/// distinct code so callers can branch without parsing messages.
enum class ErrorCode {
  NonAssociative,
  NoIdentity,
  NoInverse,
  SizeBudgetExceeded,
  BudgetExceeded,
  InvalidArgument,
  NotComposable,
  RootCountMismatch,
  NotAdapted,
  InconsistentOverlap,
  GroupMismatch,
  RootNotInBaseSet,
  BaseSetMissesComponent,
  NotConnected,
  BaseMismatch,
  RelatorViolation,
  EndpointMismatch,
  HypothesisViolation,
  NotACocycle,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace vkc
