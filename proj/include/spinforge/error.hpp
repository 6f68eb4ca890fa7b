#pragma once

#include <stdexcept>
#include <string>

namespace spinforge {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto exit codes and stderr messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Modulus is not an odd prime, or two residues with different moduli met.
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The active coefficient ring lacks a square root or inverse the operation needs.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

// Ambient dimensions, ranks or rings of two operands disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An odd-graded element was applied to a half-spin module.
class ParityError : public Error {
 public:
  using Error::Error;
};

// An element claimed to lie in Spin / SO / V does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (multivectors, ring elements).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search space too large for the requested regime.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of candidates.
class BoundExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace spinforge
