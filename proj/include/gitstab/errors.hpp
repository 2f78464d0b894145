#pragma once

#include <stdexcept>
#include <string>

namespace gitstab {

/// Two independent computations that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A structural hypothesis of a construction failed on the given input.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gitstab
