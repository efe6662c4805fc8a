#pragma once
#include <stdexcept>
#include <string>

namespace norlund {

// Base class for everything thrown by this library. Callers that only care
// about "did it work" can catch this one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A gamma function (or a Pochhammer denominator) was evaluated at a
// nonpositive integer.
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Parameter differences (or psi_p) too close to integers for the sine
// denominators to mean anything, or an integer constraint is violated.
struct DegenerateParameters : Error {
  explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};

// A stated convergence precondition of a series does not hold.
struct ConvergenceViolation : Error {
  explicit ConvergenceViolation(const std::string& msg) : Error(msg) {}
};

// The term cap was reached before the stagnation test fired.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// Leading coefficient of the difference equation vanished at some step.
struct DegenerateRecurrence : Error {
  explicit DegenerateRecurrence(const std::string& msg) : Error(msg) {}
};

// Closed forms exist only for a few small orders.
struct UnsupportedOrder : Error {
  explicit UnsupportedOrder(const std::string& msg) : Error(msg) {}
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace norlund
