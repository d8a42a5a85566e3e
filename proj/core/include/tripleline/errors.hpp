#pragma once

#include <stdexcept>
#include <string>

namespace tripleline {

/// Input rejected at an API boundary (bad dimensions, non-Hermitian data,
/// malformed codes, unmet preconditions).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured resource bound (enumeration order,
/// brute-force index range).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object violates a structural law it must satisfy (off-lattice
/// series coefficient, divergent limit). Signals a bug upstream.
class StructuralViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal consistency check failed (e.g. non-integer genus).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tripleline
