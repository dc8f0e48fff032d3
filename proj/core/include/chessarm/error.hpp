#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chessarm {

enum class ErrorCode {
  InvalidArgument,
  OutOfReach,
  Singular,
  LengthMismatch,
  IndexOutOfRange,
  NonPositiveTime,
  TooFewJoints,
  CellOutOfRange,
  NonPositiveLink,
  AsinDomain,
  SyntaxError,
  UnreachableBoard,
  GripperStateError,
  IkFailure,
  StepTooLarge,
  TraceCapExceeded,
  ConfigError,
};

/// Stable name used in diagnostics and reports ("OutOfReach", ...).
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Raised by the command parser. `offset` is the byte offset of the
/// offending token within the parsed line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected, std::string found,
              std::size_t line = 0);

  std::size_t offset() const noexcept { return offset_; }
  /// 1-based script line, 0 when parsing a single command.
  std::size_t line() const noexcept { return line_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
  std::size_t line_;
};

}  // namespace chessarm
