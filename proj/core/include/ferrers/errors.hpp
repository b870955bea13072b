#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (partition strings, flags).
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// alpha *_i beta requested with alpha_i <= beta_{i+1}.
class SpliceUndefined : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured size or work budget was exceeded. Never a silent truncation.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would wrap.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug upstream of the throw site.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ferrers
