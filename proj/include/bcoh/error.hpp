#pragma once

#include <stdexcept>
#include <string>

namespace bcoh {

/// Bad input: malformed data, violated preconditions. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold did not. Always a bug. CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bcoh
