#pragma once

#include <stdexcept>
#include <string>

namespace kglab {

// Invalid parameters or configuration; maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite values or a diverged trajectory; maps to CLI exit code 3.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the input field was violated (shape, parity, support).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace kglab
