#ifndef PANTS_ERROR_HPP
#define PANTS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pants {

enum class ErrorCode {
  NotTrivalent,
  Disconnected,
  BadGenus,
  BadParameters,
  ParseError,
  IllegalMove,
  AlreadyLoop,
  NoLoop,
  GenusTooSmall,
  GenusTooLarge,
  UnknownForm,
  SearchBudgetExceeded,
  IOError,
  FormatVersionMismatch,
  LiftInvariantViolation,
  WrongLoopCount,
  BoundViolation,
  IndexOutOfRange,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pants

#endif  // PANTS_ERROR_HPP
