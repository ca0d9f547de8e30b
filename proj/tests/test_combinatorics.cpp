#include "cosint/combinatorics.hpp"

#include <doctest.h>

#include <random>

using cosint::BigInt;
using cosint::Rational;
using namespace cosint;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);

  // iterated-multiplication oracle, checked against the frozen literal
  BigInt oracle = 1;
  for (int i = 1; i <= 20; ++i) oracle *= i;
  CHECK(oracle == BigInt("2432902008176640000"));
  CHECK(factorial(20) == oracle);

  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("double factorial with the empty-product conventions") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(7) == 105); // 7*5*3*1

  // direct product oracle for the even case
  BigInt oracle = 1;
  for (int i = 8; i >= 2; i -= 2) oracle *= i;
  CHECK(oracle == 384);
  CHECK(double_factorial(8) == oracle);

  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial(3, -2), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal identity (randomized)") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dn(1, 64);
  for (int trial = 0; trial < 300; ++trial) {
    int n = dn(rng);
    int k = std::uniform_int_distribution<int>(1, n)(rng);
    CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("half-integer binomial coefficients") {
  CHECK(half_binomial(-1, 0) == Rational(1));
  CHECK(half_binomial(-1, 1) == Rational(-1, 2));

  // product-formula oracle for C(-1/2, 2) = (-1/2)(-3/2)/2!
  Rational oracle(1);
  for (int i = 0; i < 2; ++i) oracle *= Rational(-1 - 2 * i, 2);
  oracle /= Rational(2);
  CHECK(oracle == Rational(3, 8));
  CHECK(half_binomial(-1, 2) == oracle);

  CHECK(half_binomial(-3, 1) == Rational(-3, 2));
  CHECK(half_binomial(-3, 2) == Rational(15, 8));
  CHECK_THROWS_AS(half_binomial(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(half_binomial(-1, -1), std::invalid_argument);
}

TEST_CASE("double factorials interleave into the factorial") {
  for (int j = 0; j <= 200; ++j)
    CHECK(double_factorial(2 * j) * double_factorial(2 * j - 1) == factorial(2 * j));
}

TEST_CASE("(2j)!!/(2j-1)!! equals 2^{2j}/C(2j,j) exactly") {
  for (int j = 1; j <= 200; ++j) {
    Rational lhs(double_factorial(2 * j), double_factorial(2 * j - 1));
    Rational rhs(BigInt(1) << (2 * j), binomial(2 * j, j));
    CHECK(lhs == rhs);
  }
}
