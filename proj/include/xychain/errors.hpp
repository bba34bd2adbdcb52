#pragma once

#include <stdexcept>

namespace xychain {

// Invalid caller-supplied value (out-of-range site, gamma outside [0, 1], ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input object broke a documented invariant (non-Hermitian operator,
// negative density-matrix eigenvalue, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Eigensolver failure or a numerical post-condition that could not be met.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xychain
