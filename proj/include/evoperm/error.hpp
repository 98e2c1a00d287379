#pragma once

#include <stdexcept>
#include <string>

namespace evoperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that cannot be read at all (bad JSON, bad number syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant (not a bijection,
/// wrong lengths, pi == tau, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an algebra that does not satisfy the operation's
/// hypothesis. The message names the failed hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace evoperm
