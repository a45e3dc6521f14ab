#pragma once

#include <stdexcept>
#include <string>

namespace osmotic {

// Invalid or inconsistent setup: bad config file, bad key, violated
// infrastructure constraint. Reported before a run starts.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition or degenerate input to a computation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace osmotic
