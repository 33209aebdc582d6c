#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the operation (|q| >= 1, bad range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (Gamma at a nonpositive integer, 1/(s+j) with s+j = 0).
class PoleError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// A series did not reach the requested tolerance within max_terms.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Identity requested with a shift index of the wrong parity.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
