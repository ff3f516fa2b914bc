#pragma once

#include <stdexcept>

namespace yw {

// An enumeration or sweep exceeded its configured budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A crystal operator produced a wall outside the active model. The operators
// are closed on both models, so this is a broken invariant, not a user error.
struct ModelViolationError : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed, missing, or checksum-mismatched data file.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace yw
