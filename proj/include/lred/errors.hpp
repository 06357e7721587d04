#pragma once

#include <stdexcept>
#include <string>

namespace lred {

// Base class for every error raised by the library. The CLI maps each
// subclass onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad decimal/fraction strings, bad JSON shapes.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (singular matrix, zero
// modulus, integral SAP vector, ...). The message names the condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A brute-force solver was asked for an instance beyond its configured
// dimension, denominator or node budget.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A runtime invariant or an oracle contract did not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace lred
