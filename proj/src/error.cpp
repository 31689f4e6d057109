#include "pants/error.hpp"

namespace pants {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadGenus: return "BadGenus";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::AlreadyLoop: return "AlreadyLoop";
    case ErrorCode::NoLoop: return "NoLoop";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::UnknownForm: return "UnknownForm";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::FormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorCode::LiftInvariantViolation: return "LiftInvariantViolation";
    case ErrorCode::WrongLoopCount: return "WrongLoopCount";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pants
