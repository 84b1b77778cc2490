#pragma once

#include <stdexcept>
#include <string>

namespace treex {

/// Raised for malformed or inconsistent input data (bad files, NaN
/// coordinates, mismatched array lengths). Maps to CLI exit code 1,
/// as do std::invalid_argument parameter errors.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace treex
