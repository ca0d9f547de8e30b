#pragma once

#include "cosint/rational.hpp"

namespace cosint {

/// n! for n >= 0.
BigInt factorial(int n);

/// n!! for n >= -1, with the conventions (-1)!! = 0!! = 1.
/// For n >= 1 this is n(n-2)(n-4)... down to 1 or 2.
BigInt double_factorial(int n);

/// C(n, k) for n, k >= 0; returns 0 when k > n.
BigInt binomial(int n, int k);

/// Generalized binomial coefficient C(alpha_num/2, n) for odd alpha_num,
/// i.e. the product alpha(alpha-1)...(alpha-n+1)/n! with alpha = alpha_num/2.
Rational half_binomial(int alpha_num, int n);

} // namespace cosint
