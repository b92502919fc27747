#pragma once

#include <stdexcept>
#include <string>

namespace commtuple {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters or labels that violate a precondition (non-prime p, n < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Some commutator of the tuple is not a scalar p-th root of unity, or the
/// factors disagree on its exponent.
class NotAlmostCommuting : public Error {
 public:
  using Error::Error;
};

/// A generator expected to be central (Case 2 head, Case 3 residual w_k) is not.
class NonCentralResidual : public Error {
 public:
  using Error::Error;
};

/// Matrices handed to simultaneous diagonalization do not commute.
class NotCommuting : public Error {
 public:
  using Error::Error;
};

/// Rep-point canonicalization was requested for a tuple outside the identity component.
class NotIdentityComponent : public Error {
 public:
  using Error::Error;
};

/// Internal arithmetic invariant broken: a division that must be exact was not.
class InexactArithmetic : public Error {
 public:
  using Error::Error;
};

/// Matrix-group closure did not stabilize within its round budget.
class ClosureDidNotStabilize : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// JSON document has the wrong shape for the requested schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document whose numerical contents fail validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace commtuple
