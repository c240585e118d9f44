#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

// Malformed input, violated preconditions, stale arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration caps and similar resource limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathhom
