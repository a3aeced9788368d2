#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rankproj {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two Chow elements from different Grassmannians were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// The element has no multiplicative inverse (constant term is not a unit).
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed pattern text.  Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// A block of the entry set has no known Grassmann class.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

}  // namespace rankproj
