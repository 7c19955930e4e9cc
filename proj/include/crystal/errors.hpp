#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

// A violated precondition or malformed input. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A uniqueness, agreement or calibration check failed. These indicate a bug
// (or an astronomically unlucky random sample), never bad input. Exit code 2.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crystal
