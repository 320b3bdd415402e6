#pragma once

#include <stdexcept>
#include <string>

namespace nfs {

/// Raised when an input exceeds a configured enumeration or table bound.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when 128-bit intermediate arithmetic would overflow.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace nfs
