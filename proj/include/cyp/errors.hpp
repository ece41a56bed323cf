#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyp {

enum class ErrorCode {
  InvalidArgument,
  NotAnEdge,
  LoopContraction,
  SizeLimitExceeded,
  ZeroStep,
  EmptyQ,
  NotCanonical,
  SyntaxError,
  IndexOutOfRange,
  EmptyWord,
  NotRegularizable,
  SynthesisFailed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Word-grammar error carrying the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::SyntaxError,
              message + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cyp
