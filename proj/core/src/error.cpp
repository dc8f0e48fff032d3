#include "chessarm/error.hpp"

#include <utility>

namespace chessarm {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfReach: return "OutOfReach";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::TooFewJoints: return "TooFewJoints";
    case ErrorCode::CellOutOfRange: return "CellOutOfRange";
    case ErrorCode::NonPositiveLink: return "NonPositiveLink";
    case ErrorCode::AsinDomain: return "AsinDomain";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnreachableBoard: return "UnreachableBoard";
    case ErrorCode::GripperStateError: return "GripperStateError";
    case ErrorCode::IkFailure: return "IkFailure";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::TraceCapExceeded: return "TraceCapExceeded";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

SyntaxError::SyntaxError(std::size_t offset, std::string expected, std::string found,
                         std::size_t line)
    : Error(ErrorCode::SyntaxError,
            (line > 0 ? "line " + std::to_string(line) + ", " : std::string()) + "offset " +
                std::to_string(offset) + ": expected " + expected +
                (found.empty() ? std::string(", found end of input")
                               : ", found \"" + found + "\"")),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)),
      line_(line) {}

}  // namespace chessarm
