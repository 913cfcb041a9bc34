#pragma once

#include <stdexcept>

namespace sklo {

// Thrown when an operation would exceed its resource guard (grid length,
// enumeration size, sample budget).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sklo
