#pragma once

#include <stdexcept>

namespace mink {

// a numerically impossible construction (root bracket missing, precondition
// violated by the data rather than by the caller)
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mink
