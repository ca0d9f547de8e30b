#include "cosint/series.hpp"

#include "cosint/combinatorics.hpp"
#include "cosint/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace cosint;

TEST_CASE("inverse-sqrt series coefficients") {
  CHECK(inv_sqrt_coeff(0) == Rational(1));
  CHECK(inv_sqrt_coeff(1) == Rational(1, 2));
  CHECK(inv_sqrt_coeff(3) == Rational(5, 16)); // 5!!/6!! = 15/48
  CHECK_THROWS_AS(inv_sqrt_coeff(-1), std::invalid_argument);
}

TEST_CASE("inverse-sqrt coefficients match the term-ratio oracle") {
  // independent incremental oracle: c_{n+1} = c_n * (2n+1)/(2n+2)
  Rational c(1);
  for (int n = 0; n <= 100; ++n) {
    CHECK(inv_sqrt_coeff(n) == c);
    CHECK(inv_sqrt_coeff(n) > Rational(0));
    CHECK(inv_sqrt_coeff(n) <= Rational(1));
    c *= Rational(2 * n + 1, 2 * n + 2);
  }
}

TEST_CASE("inverse-sqrt coefficients equal the half-integer binomials") {
  for (int n = 0; n <= 100; ++n) {
    Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(inv_sqrt_coeff(n) == sign * half_binomial(-1, n));
  }
}

TEST_CASE("(1-x)^{-3/2} coefficients") {
  CHECK(inv_three_halves_coeff(0) == Rational(1));
  CHECK(inv_three_halves_coeff(1) == Rational(3, 2));
  CHECK(inv_three_halves_coeff(2) == Rational(15, 8)); // 5!!/4!!

  // term-ratio oracle: c_{n+1} = c_n * (2n+3)/(2n+2)
  Rational c(1);
  for (int n = 0; n <= 100; ++n) {
    CHECK(inv_three_halves_coeff(n) == c);
    CHECK(inv_three_halves_coeff(n) >= Rational(1));
    Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(inv_three_halves_coeff(n) == sign * half_binomial(-3, n));
    c *= Rational(2 * n + 3, 2 * n + 2);
  }
}

TEST_CASE("even J values read off the series") {
  CHECK(j_even_from_series(0) == PiExpr::term(Rational(1, 8), 2));
  CHECK(j_even_from_series(3) == PiExpr::term(Rational(5, 128), 2));
  CHECK(j_even_from_series(2) == PiExpr::term(Rational(3, 64), 2));
  for (int n = 0; n <= 100; ++n) CHECK(j_even_from_series(n) == j_from_relation(2 * n).value);
}

TEST_CASE("even W values read off the series") {
  CHECK(w_even_from_series(0) == PiExpr::term(Rational(1, 2), 1));
  CHECK(w_even_from_series(1) == PiExpr::term(Rational(1, 4), 1));
  CHECK(w_even_from_series(2) == PiExpr::term(Rational(3, 16), 1));
  for (int n = 0; n <= 100; ++n) CHECK(w_even_from_series(n) == wallis_closed(2 * n).value);
}

TEST_CASE("odd W reciprocals are the (1-x)^{-3/2} coefficients") {
  CHECK(w_odd_reciprocal_check(0) == Rational(1));
  CHECK(w_odd_reciprocal_check(1) == Rational(3, 2));
  CHECK(w_odd_reciprocal_check(3) == Rational(35, 16));
  for (int n = 0; n <= 100; ++n)
    CHECK(w_odd_reciprocal_check(n) * wallis_closed(2 * n + 1).value.coeff(0) == Rational(1));
}

TEST_CASE("truncated inverse-sqrt series converges at x = 1/4") {
  // partial sums approach 1/sqrt(3/4) = 2/sqrt(3); tail is geometric-bounded
  Rational x(1, 4);
  Rational sum(0);
  Rational xn(1);
  for (int n = 0; n <= 60; ++n) {
    sum += inv_sqrt_coeff(n) * xn;
    xn *= x;
  }
  const double target = 2.0 / std::sqrt(3.0);
  CHECK(std::abs(sum.to_double() - target) < 1e-6);
}
