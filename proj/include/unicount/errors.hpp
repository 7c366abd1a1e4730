#pragma once

#include <stdexcept>

namespace unicount {

// Invariant-style failures. All of these indicate bad input or a genuine
// math/logic bug; none are recoverable mid-computation.

// exact_div: the dividend is not a polynomial multiple of the divisor.
struct NotDivisibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// interpolation produced a non-integer coefficient (wrong degree bound or a
// corrupted sample).
struct NonIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an overdetermined interpolation had extra samples that the fitted
// polynomial fails to reproduce.
struct OverdeterminedMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNilpotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an interpolated fixed-point polynomial whose constant term is not 1;
// see interpolate_stable_flag_poly.
struct ConstantTermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// deterministic refusal: the requested enumeration exceeds the configured
// element budget.  Raised up front, never as a timeout.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace unicount
