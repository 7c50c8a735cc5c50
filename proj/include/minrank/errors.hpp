#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minrank {

/// Raised for malformed input: bad diagram data, unknown selectors, etc.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group or closure outgrew the configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what + " (partial count " + std::to_string(partial) + ")"),
        partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// An internal assertion of the orbit model failed on a pair that passed validation.
class ModelInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minrank
