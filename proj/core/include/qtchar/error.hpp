#pragma once

#include <stdexcept>
#include <string>

namespace qtchar {

/// Bad user-supplied data: unknown vertex, malformed diagram name, parse
/// failures. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed one of its structural invariants. Either the
/// input lies outside the range where an algorithm is valid, or there is a
/// bug upstream. The CLI maps this to exit code 3.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an operation needs m <= p and the two monomials are not
/// comparable.
class NotComparable : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

/// Termination guard for the expansion and closure loops.
class CapExceeded : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

}  // namespace qtchar
