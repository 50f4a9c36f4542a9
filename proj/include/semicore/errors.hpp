#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicore {

enum class ErrorKind {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  ParseError,
  DegreeTooLarge,
  EmptyGraph,
  TraceMismatch,
  TooFewVertices,
  InternalBudgetError,
  InvariantViolated,
  DomainError,
  ConvergenceError,
  TooLarge,
  IoError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::InternalBudgetError: return "InternalBudgetError";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConvergenceError: return "ConvergenceError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what tests
/// and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the edge-list reader. `line()` is 1-based; `cause()` is the
/// underlying validation failure (ParseError itself for syntax problems).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, ErrorKind cause, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message),
        line_(line),
        cause_(cause) {}

  std::size_t line() const noexcept { return line_; }
  ErrorKind cause() const noexcept { return cause_; }

 private:
  std::size_t line_;
  ErrorKind cause_;
};

}  // namespace semicore
