#pragma once

#include <stdexcept>
#include <string>

namespace cutoff {

// Argument or state outside the mathematical domain of an operation
// (distance outside [0, R], probability outside [0, 1], non-positive cost).
// Alias kept so call sites read as the error category they raise.
using DomainError = std::domain_error;

// A root finder failed to converge or a bracket that must exist did not.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration document parsed as JSON but does not match the schema
// (missing field, wrong type, unknown distribution kind).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cutoff
