#pragma once

#include <stdexcept>
#include <string>

namespace scalarflat {

// Malformed input: wrong shapes, out-of-domain parameters, bad descriptors.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A line bundle model whose curvature does not integrate to its degree.
class DegreeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// m(E) > g is impossible for a rank-two bundle over a curve of genus g.
class NagataViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Two routes to the same quantity disagree, or a "real" result carries an
// imaginary part above tolerance.
class NumericalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The right-hand side violates the Fredholm compatibility condition.
class SolvabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scalarflat
