#pragma once

#include <stdexcept>
#include <string>

namespace yw {

// Input outside the documented domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed configuration or argument.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration search space exceeded the configured bound.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace yw
