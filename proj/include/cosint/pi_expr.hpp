#pragma once

#include "cosint/rational.hpp"

#include <array>
#include <iosfwd>

namespace cosint {

/// Exact number of the form q_{-1}*pi^-1 + q_0 + q_1*pi + q_2*pi^2 with
/// rational coefficients. This is the closed value algebra of every integral
/// in the library: no exponent outside [-1, 2] can ever appear, and shifting
/// out of that range throws rather than silently extending the basis.
///
/// Only addition/subtraction, scaling by a Rational and shifting by a power
/// of pi are provided; a general PiExpr*PiExpr product is deliberately absent.
class PiExpr {
public:
  static constexpr int min_exp = -1;
  static constexpr int max_exp = 2;

  PiExpr() = default;                                  // zero
  explicit PiExpr(const Rational& constant) { c_[idx(0)] = constant; }

  /// q * pi^exp. Throws std::domain_error if exp is outside [-1, 2].
  static PiExpr term(const Rational& q, int exp);

  /// Inverse of render() on canonical strings, e.g. "3/64*pi^2 - 1/4".
  static PiExpr parse(std::string_view s);

  /// Coefficient of pi^exp; exp must lie in [-1, 2].
  const Rational& coeff(int exp) const;

  bool is_zero() const;

  /// Multiplication by pi^j. Throws std::domain_error if any nonzero
  /// coefficient would land outside the supported exponent range.
  PiExpr shifted(int j) const;

  /// Floating-point value: coefficients are converted individually and the
  /// terms summed in descending exponent order.
  double eval() const;

  /// Canonical rendering, exponent-descending with sign-separated terms:
  /// "3/64*pi^2 - 1/4", "1/2*pi", "1/16*pi - 1/4*pi^-1"; zero renders "0".
  std::string render() const;

  friend PiExpr operator+(const PiExpr& a, const PiExpr& b);
  friend PiExpr operator-(const PiExpr& a, const PiExpr& b);
  PiExpr operator-() const;
  PiExpr& operator+=(const PiExpr& o);
  PiExpr& operator-=(const PiExpr& o);

  friend PiExpr operator*(const PiExpr& a, const Rational& s);
  friend PiExpr operator*(const Rational& s, const PiExpr& a) { return a * s; }

  friend bool operator==(const PiExpr& a, const PiExpr& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PiExpr& a, const PiExpr& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const PiExpr& e);

private:
  static std::size_t idx(int exp) { return static_cast<std::size_t>(exp - min_exp); }
  std::array<Rational, 4> c_; // exponents -1, 0, 1, 2
};

} // namespace cosint
