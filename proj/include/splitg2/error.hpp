#pragma once

#include <stdexcept>
#include <string>

namespace splitg2 {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  InvalidModulus,
  ShapeMismatch,
  NotInteger,
  NotInSpan,
  NotClosed,
  ParameterizationMismatch,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it to a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splitg2
