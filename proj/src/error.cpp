#include "ribbon/error.hpp"

namespace ribbon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::VertexNotOnCycle: return "VertexNotOnCycle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ChipAtExcludedRoot: return "ChipAtExcludedRoot";
    case ErrorCode::CycleMismatch: return "CycleMismatch";
    case ErrorCode::PeriodViolation: return "PeriodViolation";
    case ErrorCode::NotReached: return "NotReached";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace ribbon
