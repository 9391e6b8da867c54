#pragma once

#include <stdexcept>
#include <string>

namespace tourney {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: contradictory arc lists, bad file syntax, values out
// of range. The message names the offending pair / line where possible.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Domain violation: the operation needs a decomposable tournament.
class IndecomposableInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Domain violation: the operation is undefined for transitive tournaments of
// even order.
class TransitiveEvenError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configurable resource limit (order cap, subset-search cap) was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace tourney
