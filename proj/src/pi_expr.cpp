#include "cosint/pi_expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace cosint {

PiExpr PiExpr::term(const Rational& q, int exp) {
  if (exp < min_exp || exp > max_exp)
    throw std::domain_error("PiExpr: exponent " + std::to_string(exp) + " unsupported");
  PiExpr e;
  e.c_[idx(exp)] = q;
  return e;
}

const Rational& PiExpr::coeff(int exp) const {
  if (exp < min_exp || exp > max_exp)
    throw std::invalid_argument("PiExpr: exponent " + std::to_string(exp) + " out of range");
  return c_[idx(exp)];
}

bool PiExpr::is_zero() const {
  for (const auto& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

PiExpr PiExpr::shifted(int j) const {
  PiExpr r;
  for (int e = min_exp; e <= max_exp; ++e) {
    const Rational& q = c_[idx(e)];
    if (q.is_zero()) continue;
    const int t = e + j;
    if (t < min_exp || t > max_exp)
      throw std::domain_error("PiExpr: shift by " + std::to_string(j) +
                              " leaves the exponent range");
    r.c_[idx(t)] = q;
  }
  return r;
}

double PiExpr::eval() const {
  constexpr double pi = std::numbers::pi;
  const double p[4] = {1.0 / pi, 1.0, pi, pi * pi};
  double sum = 0.0;
  for (int e = max_exp; e >= min_exp; --e)
    sum += c_[idx(e)].to_double() * p[idx(e)];
  return sum;
}

PiExpr operator+(const PiExpr& a, const PiExpr& b) {
  PiExpr r = a;
  r += b;
  return r;
}

PiExpr operator-(const PiExpr& a, const PiExpr& b) {
  PiExpr r = a;
  r -= b;
  return r;
}

PiExpr PiExpr::operator-() const {
  PiExpr r;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

PiExpr& PiExpr::operator+=(const PiExpr& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PiExpr& PiExpr::operator-=(const PiExpr& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PiExpr operator*(const PiExpr& a, const Rational& s) {
  PiExpr r;
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
  return r;
}

namespace {

std::string pi_power(int exp) {
  switch (exp) {
    case 2: return "pi^2";
    case 1: return "pi";
    case 0: return "";
    default: return "pi^" + std::to_string(exp);
  }
}

} // namespace

std::string PiExpr::render() const {
  std::string out;
  for (int e = max_exp; e >= min_exp; --e) {
    const Rational& q = coeff(e);
    if (q.is_zero()) continue;
    if (out.empty())
      out += q.sign() < 0 ? "-" : "";
    else
      out += q.sign() < 0 ? " - " : " + ";
    const Rational m = abs(q);
    const std::string p = pi_power(e);
    if (p.empty())
      out += m.str();
    else if (m == Rational(1))
      out += p;
    else
      out += m.str() + "*" + p;
  }
  return out.empty() ? "0" : out;
}

PiExpr PiExpr::parse(std::string_view s) {
  PiExpr result;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos == s.size()) throw std::invalid_argument("PiExpr: empty input");
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("PiExpr: expected '+' or '-'");
    }
    first = false;
    // term := number ['*' pipart] | pipart
    Rational mag(1);
    bool have_num = false;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos > start) {
      mag = Rational::parse(s.substr(start, pos - start));
      have_num = true;
    }
    int exp = 0;
    if (pos < s.size() && (s[pos] == '*' || s.substr(pos, 2) == "pi")) {
      if (s[pos] == '*') ++pos;
      if (s.substr(pos, 2) != "pi")
        throw std::invalid_argument("PiExpr: expected 'pi'");
      pos += 2;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es) throw std::invalid_argument("PiExpr: malformed exponent");
        exp = std::stoi(std::string(s.substr(es, pos - es)));
      }
    } else if (!have_num) {
      throw std::invalid_argument("PiExpr: malformed term");
    }
    if (sign < 0) mag = -mag;
    result += PiExpr::term(mag, exp);
    skip_ws();
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const PiExpr& e) { return os << e.render(); }

} // namespace cosint
