#include "cosint/rational.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

using cosint::BigInt;
using cosint::Rational;

namespace {

// Canonical-form invariant: gcd(|num|, den) == 1 and den >= 1.
void check_canonical(const Rational& r) {
  CHECK(r.den() >= 1);
  CHECK(gcd(abs(r.num()), r.den()) == 1);
}

} // namespace

TEST_CASE("rational arithmetic on the textbook cases") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 6) * Rational(1, 1) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 4) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(3, 6).num() == 1);
  CHECK(Rational(3, 6).den() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(0, 7).den() == 1);
  check_canonical(Rational(3, 6));
  check_canonical(Rational(-30, 42));
}

TEST_CASE("every operation output is canonical (randomized)") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> d(-1000, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    long long an = d(rng), bn = d(rng);
    long long ad = d(rng), bd = d(rng);
    if (ad == 0 || bd == 0) continue;
    Rational a(an, ad), b(bn, bd);
    check_canonical(a);
    check_canonical(b);
    check_canonical(a + b);
    check_canonical(a - b);
    check_canonical(a * b);
    if (!b.is_zero()) check_canonical(a / b);
  }
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("string form and parse round-trip") {
  CHECK(Rational(-1, 4).str() == "-1/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("-149/225") == Rational(-149, 225));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> d(-100000, 100000);
  for (int trial = 0; trial < 200; ++trial) {
    long long n = d(rng), m = d(rng);
    if (m == 0) continue;
    Rational r(n, m);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("to_double stays correct at extreme magnitudes") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-7, 8).to_double() == -0.875);
  CHECK(Rational(0).to_double() == 0.0);

  // num and den each far beyond double range; the ratio is exactly 1/3-ish
  BigInt huge = pow(BigInt(10), 400);
  CHECK(Rational(huge, 3 * huge).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(Rational(huge, BigInt(1)).to_double() == std::numeric_limits<double>::infinity());
  CHECK(Rational(BigInt(1), huge).to_double() == 0.0);
  CHECK(Rational(-huge, BigInt(7)).to_double() == -std::numeric_limits<double>::infinity());
}
