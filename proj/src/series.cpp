#include "cosint/series.hpp"

#include "cosint/combinatorics.hpp"
#include "cosint/families.hpp"

namespace cosint {

namespace {

void require_nonneg(int n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

} // namespace

Rational inv_sqrt_coeff(int n) {
  require_nonneg(n, "inv_sqrt_coeff");
  return Rational(double_factorial(2 * n - 1), double_factorial(2 * n));
}

Rational inv_three_halves_coeff(int n) {
  require_nonneg(n, "inv_three_halves_coeff");
  return Rational(double_factorial(2 * n + 1), double_factorial(2 * n));
}

PiExpr j_even_from_series(int n) {
  require_nonneg(n, "j_even_from_series");
  const PiExpr v = PiExpr::term(inv_sqrt_coeff(n) * Rational(1, 8), 2);
  Rational sign(n % 2 == 0 ? 1 : -1);
  const PiExpr binom_form = PiExpr::term(sign * half_binomial(-1, n) * Rational(1, 8), 2);
  if (v != binom_form)
    throw std::logic_error("j_even_from_series: double-factorial and binomial forms disagree");
  return v;
}

PiExpr w_even_from_series(int n) {
  require_nonneg(n, "w_even_from_series");
  return PiExpr::term(inv_sqrt_coeff(n) * Rational(1, 2), 1);
}

Rational w_odd_reciprocal_check(int n) {
  require_nonneg(n, "w_odd_reciprocal_check");
  const Rational w = wallis_closed(2 * n + 1).value.coeff(0);
  const Rational recip = Rational(1) / w;
  if (recip != inv_three_halves_coeff(n))
    throw std::logic_error("w_odd_reciprocal_check: 1/W_{2n+1} is not the series coefficient");
  return recip;
}

} // namespace cosint
