#pragma once

#include <stdexcept>
#include <string>

namespace ffront {

/// Bad input: out-of-domain argument, malformed pattern, oversized ring.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical self-check failed (truncation or quadrature drift, a
/// determinant that should be real came back complex, a root that did not
/// converge).
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ffront
