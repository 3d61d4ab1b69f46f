#pragma once

#include <stdexcept>
#include <string>

namespace vogel {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: a precondition of a public operation was violated.
/// The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (a theorem-backed invariant did not
/// hold). The CLI maps these to exit code 2.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public InputError {
 public:
  DivisionByZero() : InputError("division by zero") {}
};

class ExponentOverflow : public InputError {
 public:
  ExponentOverflow() : InputError("Laurent exponent overflows 64-bit range") {}
};

class PoleError : public InputError {
 public:
  explicit PoleError(const std::string& what) : InputError(what) {}
};

class DegenerateInput : public InputError {
 public:
  using InputError::InputError;
};

class UnknownName : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DataIntegrityError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace vogel
