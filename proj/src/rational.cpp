#include "cosint/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace cosint {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  // the backend reduces to lowest terms but rejects a negative denominator,
  // so move the sign to the numerator first
  if (den.sign() < 0)
    v_ = Backend(-num, -den);
  else
    v_ = Backend(num, den);
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    return Rational(BigInt(std::string(s.substr(0, slash))),
                    BigInt(std::string(s.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
  }
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  BigInt n = boost::multiprecision::abs(num());
  BigInt d = den();
  // Normalize so n/d carries ~96 significant bits, convert, then undo the
  // scaling with ldexp. Avoids inf/inf when either side exceeds 2^1024.
  const long shift = 96 - (static_cast<long>(msb(n)) - static_cast<long>(msb(d)));
  if (shift > 0)
    n <<= shift;
  else
    d <<= -shift;
  const double q = (n / d).convert_to<double>();
  const double x = std::ldexp(q, static_cast<int>(-shift));
  return sign() < 0 ? -x : x;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

} // namespace cosint
