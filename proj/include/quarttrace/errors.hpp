#pragma once

#include <stdexcept>
#include <string>

namespace qt {

// Configuration / validation problems.  The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures (lost bracket, pole proximity, misaligned pairing).
// The CLI maps these to exit code 1.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : NumericError {
  explicit PoleError(const std::string& what) : NumericError(what) {}
};

}  // namespace qt
