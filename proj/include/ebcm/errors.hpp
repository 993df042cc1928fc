#pragma once

#include <stdexcept>
#include <string>

namespace ebcm {

// Invalid configuration value or malformed config file. Maps to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure (unreadable config, unwritable output). Maps to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A statistics operation was asked to compare a run that produced no clicks.
struct EmptyRunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ebcm
