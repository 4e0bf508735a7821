#pragma once

#include <stdexcept>
#include <string>

namespace quivalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Relation is zero, non-parallel, or not contained in the square of the
// arrow ideal; such presentations are rejected before completion starts.
struct MalformedRelation : Error {
  using Error::Error;
};

struct NonParallelRelation : Error {
  using Error::Error;
};

struct CompletionBudgetExceeded : Error {
  using Error::Error;
};

struct NoFiniteCertificate : Error {
  using Error::Error;
};

struct StabilizationFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace quivalg
