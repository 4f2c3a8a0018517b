#pragma once

#include <stdexcept>
#include <string>

namespace rootclosed {

/// Raised for invalid input: bad root-system types, malformed permutations,
/// non-closed sets handed to operations that require closedness, caps exceeded.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rootclosed
