#pragma once

#include <stdexcept>
#include <string>

namespace convcode {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input that violates its precondition
/// (non-basic encoder, non-reduced encoder where one is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search or enumeration would exceed its configured limit.
/// Searches never truncate silently; they throw this instead.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace convcode
