#pragma once

#include <stdexcept>
#include <string>

namespace germforge {

enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  IndexOutOfRange,
  DimensionMismatch,
  PreconditionViolated,
  NotZeroDimensional,
  ZeroIdeal,
  FNotInIdeal,
  NotFiniteCodim,
  FNotUnfolding,
  FNotInJSquared,
  NonAdaptedCoordinates,
  RadicalUnavailable,
  NotIsolated,
  InfiniteLength,
  PositiveDimensionalCriticalLocus,
  GenericitySuspect,
  NonrationalPoints,
  UnknownCommand,
  UnknownName,
};

/// Stable upper-case identifier used in CLI output, e.g. "F_NOT_IN_IDEAL".
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace germforge
