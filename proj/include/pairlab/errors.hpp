#pragma once

#include <stdexcept>
#include <string>

namespace pairlab {

// Error categories map onto CLI exit codes: ConfigError -> 2,
// DataError -> 3, FitError -> 4.

/// Invalid configuration (bad key, missing key, out-of-domain value).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated data contract (unsorted stream, degenerate counts, bad preconditions).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fit did not converge or had insufficient data.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pairlab
