#pragma once

#include <stdexcept>
#include <string>

namespace intrel {

// Malformed input: out-of-range indices, size mismatches, bad JSON shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a configured enumeration ceiling.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked coefficient arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An operation was requested on a family that does not support it.
class UnsupportedFamily : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A fiber-sum product or coproduct failed to re-expand in its own basis.
// Seeing this means a bug, not bad input.
class ClosureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace intrel
