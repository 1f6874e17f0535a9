#pragma once

#include <stdexcept>
#include <string>

namespace fusionlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad permutations, mismatched dimensions, unknown
/// catalog names, non-normal subgroups handed to a quotient, and so on.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (closure order, subgroup enumeration) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A cochain computation would exceed the configured memory budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Text input (group or module file) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what) {}
  using Error::Error;
};

/// The module does not satisfy the compatibility condition needed for the
/// pullback along a fusion morphism to be a cochain map.
class IncompatibleModule : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (d∘d ≠ 0, failed lift, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusionlab
