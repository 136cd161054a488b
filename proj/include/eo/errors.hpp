#pragma once

#include <stdexcept>

namespace eo {

/// An internal consistency check failed. Always indicates a bug, never bad
/// input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eo
