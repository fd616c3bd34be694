#pragma once

#include <stdexcept>

namespace specshare {

// Invalid run configuration or malformed config document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values reached the learning machinery; the run must abort.
class TrainingFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specshare
