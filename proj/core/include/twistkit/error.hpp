#pragma once

#include <stdexcept>
#include <string>

namespace twistkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: group/cocycle specs, files, DSL strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded (group order, table size, ...).
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (non-normal subgroup, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. These indicate a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistkit
