#pragma once

#include <stdexcept>
#include <string>

namespace quivernc {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { syntax, oriented_cycle, loop, duplicate_vertex };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Bad caller input: mismatched dimensions, non-roots, unknown vertices, sign violations...
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotFiniteTypeError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration or rank limit exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace quivernc
