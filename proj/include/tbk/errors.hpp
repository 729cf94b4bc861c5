#pragma once

#include <stdexcept>
#include <string>

namespace tbk {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto a single "invalid input" exit path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails (e.g. a presentation whose
// relation entries share no common factor).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tbk
