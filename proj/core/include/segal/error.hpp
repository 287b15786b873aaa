#pragma once

#include <stdexcept>
#include <string>

namespace segal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (arity mismatch, bounds, wrong group).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An asserted identity failed; `what()` carries the counterexample.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace segal
