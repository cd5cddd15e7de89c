#pragma once

#include <stdexcept>
#include <string>

namespace bcast {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input: bad edge lists, cyclic graphs, broadcasts
/// exceeding an eccentricity cap, unparsable text.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request outside an operation's domain (not a caterpillar,
/// size cap exceeded, no admissible extension exists).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotCaterpillar : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A mathematical invariant failed. Always a bug in this library, never a
/// property of the input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bcast
