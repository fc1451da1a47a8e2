#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holgal {

// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed the configured size bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t requested, std::size_t bound)
      : std::runtime_error("group order " + std::to_string(requested) +
                           " exceeds the configured bound " +
                           std::to_string(bound) +
                           " (raise it with --max-order or HOLGAL_MAX_ORDER)"),
        requested_(requested),
        bound_(bound) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

}  // namespace holgal
