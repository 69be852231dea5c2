#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsbott {

enum class ErrorCode {
  EmptyWord,
  LetterOutOfRange,
  NotAPartition,
  MinOrderViolated,
  BoundExceeded,
  NotABottMatrix,
  IndexOutOfRange,
  NotBsType,
  GroundMismatch,
  NotAdmissible,
  NotApplicable,
  NotIndecomposable,
  OrbitCapExceeded,
  TruncationTooSmall,
  InternalAssertion,
  ParseError,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown where a proven property of the construction fails to hold.
[[noreturn]] inline void internal_assertion(const std::string& what) {
  throw Error(ErrorCode::InternalAssertion, what);
}

}  // namespace bsbott
