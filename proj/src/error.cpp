#include "vkc/error.hpp"

namespace vkc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::InconsistentOverlap: return "InconsistentOverlap";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::RootNotInBaseSet: return "RootNotInBaseSet";
    case ErrorCode::BaseSetMissesComponent: return "BaseSetMissesComponent";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::RelatorViolation: return "RelatorViolation";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace vkc
