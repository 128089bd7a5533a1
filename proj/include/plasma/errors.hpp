#pragma once

#include <stdexcept>
#include <string>

namespace plasma {

// Thrown when a computation would exceed a configured size limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateEigenvalueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegralityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cache file problems.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VersionError : FormatError {
  using FormatError::FormatError;
};
struct ChecksumError : FormatError {
  using FormatError::FormatError;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace plasma
