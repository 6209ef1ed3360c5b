#pragma once

#include <stdexcept>
#include <string>

namespace tribo {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Window or index outside the materialized buffer.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Morphism/seed combination that cannot generate a fixed point, or a buffer
// request above the configured maximum.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class InvalidRepresentation : public Error {
 public:
  using Error::Error;
};

class NotAFactor : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A numeric claim could not be confirmed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace tribo
