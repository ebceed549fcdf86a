#pragma once

#include <stdexcept>
#include <string>

namespace idealshi {

/// An input violated a documented precondition (malformed multiset, hyperplane
/// not in the arrangement, subspace not in the lattice, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size guard refused the computation.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; this always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace idealshi
