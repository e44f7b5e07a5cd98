#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgsl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatches, out-of-range indices, invalid parameter values.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed dataset or graph files. The message names file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Non-finite losses, degenerate inputs to spectral routines.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Missing or contradictory experiment settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rgsl
