#pragma once

#include <stdexcept>
#include <string>

namespace vacdist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent sizes, indices or parameters.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// An input that should satisfy a mathematical property (unitarity,
/// hermiticity) does not.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// The distillation protocol cannot continue, e.g. the active subspace
/// has (numerically) vanished or the energy estimate is zero.
class DegenerateProtocolError : public Error {
  public:
    using Error::Error;
};

/// An iterative numerical routine failed to converge.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Bad arguments at the user-facing layer (CLI, statistics helpers).
class UsageError : public Error {
  public:
    using Error::Error;
};

} // namespace vacdist
