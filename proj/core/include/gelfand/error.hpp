#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: bad input, wrong characteristic, zero vector.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree, or a construction that cannot
// fail did. Always a bug or a counterexample, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gelfand
