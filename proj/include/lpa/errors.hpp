#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Malformed requests: cross-graph operands, bad flags, violated operation
/// preconditions. The CLI maps this family to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent descriptor configuration (e.g. is_field without is_semifield).
struct ConfigError : UsageError {
  using UsageError::UsageError;
};

/// Structurally invalid input data (dangling edge endpoints, duplicate ids).
struct ValidationError : UsageError {
  using UsageError::UsageError;
};

/// Lexical or grammatical error in a document or expression.
struct ParseError : UsageError {
  ParseError(const std::string& what, int position)
      : UsageError(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  explicit ParseError(const std::string& what) : UsageError(what), position(-1) {}
  int position;
};

/// A configured resource bound was exceeded; the message names the bound and,
/// where applicable, the flag that lifts it.
struct CapError : UsageError {
  using UsageError::UsageError;
};

/// Invariant that the implementation promises can never fail did fail.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lpa
