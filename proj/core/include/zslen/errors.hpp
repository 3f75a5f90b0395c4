#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zslen {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured ceiling. The name of
/// the ceiling and its value are carried so callers can report them.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::string bound, std::uint64_t limit, const std::string& what)
      : std::runtime_error(what), bound_(std::move(bound)), limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::uint64_t limit_;
};

}  // namespace zslen
