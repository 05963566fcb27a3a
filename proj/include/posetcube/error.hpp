#pragma once

#include <stdexcept>
#include <string>

namespace posetcube {

enum class ErrorKind {
  UnknownElement,
  DuplicateElement,
  CycleDetected,
  UnknownName,
  BadParameter,
  MissingAssignment,
  InvalidEmbedding,
  NotTwoLayered,
  NotMaximum,
  SizeTooLarge,
  BudgetExhausted,
  SyntaxError,
  InternalError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownElement: return "unknown element";
    case ErrorKind::DuplicateElement: return "duplicate element";
    case ErrorKind::CycleDetected: return "cycle detected";
    case ErrorKind::UnknownName: return "unknown name";
    case ErrorKind::BadParameter: return "bad parameter";
    case ErrorKind::MissingAssignment: return "missing assignment";
    case ErrorKind::InvalidEmbedding: return "invalid embedding";
    case ErrorKind::NotTwoLayered: return "not two-layered";
    case ErrorKind::NotMaximum: return "matching not maximum";
    case ErrorKind::SizeTooLarge: return "size too large";
    case ErrorKind::BudgetExhausted: return "node budget exhausted";
    case ErrorKind::SyntaxError: return "syntax error";
    case ErrorKind::InternalError: return "internal invariant violated";
  }
  return "error";
}

// Domain error with a machine-checkable kind. The CLI maps any Error to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace posetcube
