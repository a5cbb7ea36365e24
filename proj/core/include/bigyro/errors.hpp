#pragma once

#include <stdexcept>
#include <string>

namespace bigyro {

/// Malformed or mismatched input: wrong shapes, bad JSON, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the domain of the operation
/// (singular matrix, non-positive-definite argument, null vector, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ĝ·v·g⁻¹ left the vector space: g is not in the Clifford group.
class NotInCliffordGroup : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computed result failed its own post-condition check.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate structure failed a verification (carries the witness in what()).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables are structurally unusable (conjugate of a B element leaves B).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reflection factorization of an SO(m,n) element could not be completed.
class LiftFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bigyro
