#pragma once

#include "cosint/pi_expr.hpp"

namespace cosint {

enum class SeriesKind { InvSqrt, InvThreeHalves };

/// One Maclaurin coefficient of (1-x)^{-1/2} (InvSqrt, values in (0, 1])
/// or (1-x)^{-3/2} (InvThreeHalves, values >= 1).
struct SeriesCoeff {
  SeriesKind series;
  int n;
  Rational value;
};

/// Coefficient of x^n in (1-x)^{-1/2}: (2n-1)!!/(2n)!!.
Rational inv_sqrt_coeff(int n);

/// Coefficient of x^n in (1-x)^{-3/2}: (2n+1)!!/(2n)!!.
Rational inv_three_halves_coeff(int n);

/// J_{2n} read off the expansion 1/sqrt(1-x) = (8/pi^2)(J_0 + J_2 x + ...),
/// i.e. (pi^2/8) times the n-th InvSqrt coefficient. Checked internally
/// against the half-integer binomial form (-1)^n C(-1/2, n) pi^2/8.
PiExpr j_even_from_series(int n);

/// W_{2n} read off 1/sqrt(1-x) = (2/pi)(W_0 + W_2 x + ...):
/// (pi/2) times the n-th InvSqrt coefficient.
PiExpr w_even_from_series(int n);

/// 1/W_{2n+1} as an exact rational; equals the n-th InvThreeHalves
/// coefficient (throws std::logic_error if the identity ever failed).
Rational w_odd_reciprocal_check(int n);

} // namespace cosint
