#pragma once

#include <stdexcept>
#include <string>

namespace backstrom {

/// Malformed or unsuitable input. The CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested computation does not apply to this input (for example a
/// suspension orbit of an order that is not sg-Hom-finite).
class NotApplicable : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A count exceeded 64-bit range (for example iterating an exponentially
/// growing syzygy too far).
class CapacityExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A checked internal invariant failed. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace backstrom
