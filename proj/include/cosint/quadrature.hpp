#pragma once

#include <functional>
#include <stdexcept>

namespace cosint {

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0; // internal Richardson estimate, >= 0
  long evaluations = 0;   // integrand calls
};

/// Thrown when the recursion-depth cap is hit before the tolerance is met
/// (or the integrand produced a non-finite value); carries the best
/// estimate assembled so far.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, QuadResult best_so_far)
      : std::runtime_error(what), best(best_so_far) {}
  QuadResult best;
};

/// Adaptive Simpson integration of f over [a, b] with the standard 1/15
/// Richardson acceptance test and a depth cap of 50. The first two
/// subdivision levels are mandatory so that a coincidental cancellation on
/// a symmetric integrand cannot end the recursion early.
/// Requires a < b and tol > 0.
///
/// This routine is the library's independent oracle: it evaluates the
/// integrand pointwise only and shares no code with the exact engine.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace cosint
