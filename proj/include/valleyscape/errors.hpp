#pragma once

#include <stdexcept>
#include <string>

namespace valleyscape {

/// Base of every error raised by the library. The CLI maps ConfigError to
/// a usage exit code and everything else to a runtime failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point dimension does not match the landscape or domain it is used with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed numeric input: non-finite coordinates, asymmetric matrices,
/// non-unit directions, ragged grids.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters or configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The smallest elliptic coefficient is not unique.
class AmbiguousValleyError : public Error {
 public:
  using Error::Error;
};

/// Forward and inverse maps do not round-trip on the probe points.
class InvalidHomeomorphismError : public Error {
 public:
  using Error::Error;
};

/// Both the tested and the benchmark ratio are undefined (0/0).
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace valleyscape
