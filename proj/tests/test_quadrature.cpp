#include "cosint/quadrature.hpp"

#include "cosint/families.hpp"
#include "cosint/verification.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace cosint;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("integrate hits analytic values at tight tolerance") {
  auto r1 = integrate([](double x) { return x; }, 0.0, pi / 2, 1e-12);
  CHECK(std::abs(r1.value - pi * pi / 8) <= 1e-12);
  CHECK(r1.est_error >= 0.0);
  CHECK(r1.evaluations >= 17); // both mandatory subdivision levels ran

  auto r2 = integrate([](double x) { return std::cos(x); }, 0.0, pi / 2, 1e-12);
  CHECK(std::abs(r2.value - 1.0) <= 1e-12);

  auto r3 = integrate([](double x) { return x * std::pow(std::cos(x), 3); }, 0.0, pi / 2, 1e-12);
  CHECK(std::abs(r3.value - (pi / 3 - 7.0 / 9.0)) <= 1e-12);
}

TEST_CASE("mirror symmetry cannot fake convergence") {
  // over a full period the halves of cos^4 mimic the whole at the first
  // split; the mandatory second level must see through that
  auto q = integrate([](double u) { return std::pow(std::cos(u), 4); }, 0.0, 2 * pi, 1e-12);
  CHECK(std::abs(q.value - 3.0 * pi / 4.0) <= 1e-10);
  CHECK(q.evaluations > 100);
}

TEST_CASE("integrate validates its arguments") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate(f, 1.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 2.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1e-9), std::invalid_argument);
}

TEST_CASE("depth cap failure carries the best estimate") {
  // step discontinuity: Simpson never meets an impossible tolerance here
  auto step = [](double x) { return x > 1.0 / 3.0 ? 1.0 : 0.0; };
  CHECK_THROWS_AS(integrate(step, 0.0, 1.0, 1e-18), QuadratureError);
  try {
    integrate(step, 0.0, 1.0, 1e-18);
  } catch (const QuadratureError& e) {
    CHECK(std::abs(e.best.value - 2.0 / 3.0) < 1e-9);
    CHECK(e.best.evaluations > 100);
  }
}

TEST_CASE("non-finite integrand values are an error, not a NaN result") {
  auto f = [](double x) { return 1.0 / x; }; // infinite at the left endpoint
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 1e-9), QuadratureError);
}

TEST_CASE("oracle converges for every family integrand up to k=30") {
  for (int k = 0; k <= 30; ++k) {
    auto w = integrate([k](double x) { return std::pow(std::cos(x), k); }, 0.0, pi / 2, 1e-12);
    CHECK(w.est_error <= 1e-12);
    auto i = integrate([k](double x) { return x * std::pow(std::cos(x), k); }, 0.0, pi / 2, 1e-12);
    CHECK(i.est_error <= 1e-12);
    auto j = integrate([k](double x) { return x * std::pow(std::cos(2 * x), k); }, 0.0, pi / 2, 1e-12);
    CHECK(j.est_error <= 1e-12);
  }
}

TEST_CASE("substitution symmetry of the upper half interval") {
  // integral of u cos^k u over [pi/2, pi] equals (-1)^k (pi W_k - I_k)
  for (int k = 0; k <= 10; ++k) {
    auto q = integrate([k](double u) { return u * std::pow(std::cos(u), k); }, pi / 2, pi, 1e-12);
    const double wk = wallis_closed(k).value.eval();
    const double ik = i_recurrence(k).value.eval();
    const double expected = (k % 2 == 0 ? 1.0 : -1.0) * (pi * wk - ik);
    CHECK(std::abs(q.value - expected) <= 1e-9);
  }
}

TEST_CASE("verify_family pairs exact values with quadrature") {
  auto reports = verify_family(Family::I, 5, 1e-9);
  REQUIRE(reports.size() == 6);
  for (const auto& r : reports) {
    CHECK(r.pass);
    CHECK(r.note.empty());
  }

  auto j0 = verify_family(Family::J, 0, 1e-9);
  REQUIRE(j0.size() == 1);
  CHECK(j0[0].pass);
  CHECK(j0[0].exact_float == doctest::Approx(pi * pi / 8).epsilon(1e-15));

  auto w = verify_family(Family::W, 2, 1e-9);
  CHECK(w.back().pass);
  CHECK(w.back().exact_float == doctest::Approx(pi / 4).epsilon(1e-15));
}

TEST_CASE("sector average reports") {
  auto reports = verify_sector_avg(3, 1e-9);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("report serialization") {
  auto reports = verify_family(Family::W, 1, 1e-9);
  std::ostringstream text;
  write_reports_text(reports, text, 15);
  CHECK(text.str().find("W k=0") != std::string::npos);
  CHECK(text.str().find("pass") != std::string::npos);

  std::ostringstream csv;
  write_reports_csv(reports, csv, 15);
  CHECK(csv.str().rfind("family,k,exact,quad,diff,pass\n", 0) == 0);
  CHECK(csv.str().find(",true") != std::string::npos);
}

TEST_CASE("verification rejects bad parameters") {
  CHECK_THROWS_AS(verify_family(Family::W, -1, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(verify_family(Family::W, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_sector_avg(-1, 1e-9), std::invalid_argument);
}
