#pragma once

#include <stdexcept>

namespace ratsurf {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on geometric or algebraic input was violated.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed net, fraction or mesh text.
struct ParseError : Error {
  using Error::Error;
};

/// Filesystem failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ratsurf
