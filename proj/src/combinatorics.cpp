#include "cosint/combinatorics.hpp"

namespace cosint {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  BigInt r = 1;
  for (int i = n; i >= 2; i -= 2) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: n and k must be >= 0");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i; // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

Rational half_binomial(int alpha_num, int n) {
  if (alpha_num % 2 == 0)
    throw std::invalid_argument("half_binomial: alpha_num must be odd");
  if (n < 0) throw std::invalid_argument("half_binomial: n must be >= 0");
  // alpha - i = (alpha_num - 2i)/2, so the numerator product stays integral.
  BigInt num = 1;
  for (int i = 0; i < n; ++i) num *= alpha_num - 2 * i;
  BigInt den = factorial(n);
  den <<= n; // times 2^n from the halved factors
  return Rational(num, den);
}

} // namespace cosint
