#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcover {

enum class ErrorCode {
  InvalidArgument,
  Syntax,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  UnknownEdge,
  TooLarge,
  BudgetExceeded,
  NotMaximum,
  OddParameter,
  ParameterOutOfRange,
  Io,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure; line is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised by the exhaustive searches when the candidate budget runs out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t reached_size, const std::string& what)
      : Error(ErrorCode::BudgetExceeded, what), reached_size_(reached_size) {}

  // Cardinality being enumerated when the budget ran out.
  std::size_t reached_size() const noexcept { return reached_size_; }

 private:
  std::size_t reached_size_;
};

}  // namespace tcover
