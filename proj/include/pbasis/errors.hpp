#pragma once

#include <stdexcept>
#include <string>

namespace pbasis {

/// Zero denominator or otherwise malformed scalar.
class InvalidScalar : public std::runtime_error {
 public:
  explicit InvalidScalar(const std::string& what) : std::runtime_error(what) {}
};

/// Vectors of different dimensions were mixed, or a row has the wrong arity.
class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated precondition.
class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

/// A desk-scale size guard was exceeded.
class SizeExceeded : public std::runtime_error {
 public:
  explicit SizeExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two circle parameters coincide.
class DuplicateParameter : public std::runtime_error {
 public:
  explicit DuplicateParameter(const std::string& what) : std::runtime_error(what) {}
};

/// A construction needs more ambient dimensions than were given.
class DimensionTooSmall : public std::runtime_error {
 public:
  explicit DimensionTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// The objective callback produced a non-finite value.
class ObjectiveFailure : public std::runtime_error {
 public:
  explicit ObjectiveFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Text input did not conform to the expected grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pbasis
