#pragma once

#include <stdexcept>
#include <string>

namespace mellinop {

/// Malformed or out-of-domain input. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not reach its tolerance. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mellinop
