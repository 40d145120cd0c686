#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tri {

enum class ErrorKind {
  CycleError,
  UnknownElement,
  NotMonotone,
  NotJoinPreserving,
  NotMeetPreserving,
  StructureNotPreserved,
  SideConditionViolated,
  TooLarge,
  CarrierMismatch,
  MonadMismatch,
  NotNormalized,
  ScalarOutOfRange,
  LensViolation,
  Incomparable,
  InvalidArgument,
  SyntaxError,
  UndeclaredVariable,
  RangeError,
  ModeMismatch,
  EvalError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace tri
