#include "cosint/families.hpp"

#include "cosint/combinatorics.hpp"

namespace cosint {

const char* family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::I: return "I";
    case Family::J: return "J";
  }
  return "?";
}

const char* route_name(Route r) {
  switch (r) {
    case Route::ClosedForm: return "closed-form";
    case Route::Recurrence: return "recurrence";
    case Route::Unrolled: return "unrolled";
    case Route::CrossRelation: return "cross-relation";
    case Route::PascalSum: return "pascal-sum";
    case Route::SeriesCoefficient: return "series";
  }
  return "?";
}

bool parity_structure_ok(const FamilyValue& v) {
  const bool even = v.k % 2 == 0;
  const auto zero = [&](int exp) { return v.value.coeff(exp).is_zero(); };
  switch (v.family) {
    case Family::W:
      return even ? zero(-1) && zero(0) && zero(2) : zero(-1) && zero(1) && zero(2);
    case Family::I:
      return even ? zero(-1) && zero(1) : zero(-1) && zero(2);
    case Family::J:
      return even ? zero(-1) && zero(0) && zero(1) : zero(-1) && zero(2);
  }
  return false;
}

namespace {

void require_nonneg_k(int k, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
}

// (k-1)!!/k!! as an exact rational.
Rational df_ratio(int k) {
  return Rational(double_factorial(k - 1), double_factorial(k));
}

// sum_{j=1}^{n} (1/j^2)(2j)!!/(2j-1)!!, the b-coefficient inner sum.
Rational df_inner_sum(int n) {
  Rational s(0);
  for (int j = 1; j <= n; ++j)
    s += Rational(BigInt(1), BigInt(j) * j) *
         Rational(double_factorial(2 * j), double_factorial(2 * j - 1));
  return s;
}

} // namespace

FamilyValue wallis_closed(int k) {
  require_nonneg_k(k, "wallis_closed");
  const Rational r = df_ratio(k);
  PiExpr v = k % 2 == 0 ? PiExpr::term(r * Rational(1, 2), 1) : PiExpr(r);
  return {Family::W, k, v, Route::ClosedForm};
}

FamilyValue wallis_recurrence(int k) {
  require_nonneg_k(k, "wallis_recurrence");
  PiExpr w = k % 2 == 0 ? PiExpr::term(Rational(1, 2), 1) // W_0 = pi/2
                        : PiExpr(Rational(1));            // W_1 = 1
  for (int m = k % 2 + 2; m <= k; m += 2) w = w * Rational(m - 1, m);
  return {Family::W, k, w, Route::Recurrence};
}

FamilyValue i_recurrence(int k) {
  require_nonneg_k(k, "i_recurrence");
  PiExpr v = k % 2 == 0
                 ? PiExpr::term(Rational(1, 8), 2)                        // I_0
                 : PiExpr::term(Rational(1, 2), 1) - PiExpr(Rational(1)); // I_1
  for (int m = k % 2 + 2; m <= k; m += 2)
    v = v * Rational(m - 1, m) - PiExpr(Rational(BigInt(1), BigInt(m) * m));
  return {Family::I, k, v, Route::Recurrence};
}

FamilyValue i_unrolled(int k, int n) {
  if (n < 1) throw std::invalid_argument("i_unrolled: n must be >= 1");
  if (k < 2 * n) throw std::invalid_argument("i_unrolled: k must be >= 2n");
  // Running product prod_{j=0}^{i-1} (k-2j-1)/(k-2j), grown one factor per i.
  Rational prod(1);
  Rational bracket(BigInt(1), BigInt(k) * k);
  for (int i = 1; i <= n - 1; ++i) {
    prod *= Rational(k - 2 * (i - 1) - 1, k - 2 * (i - 1));
    bracket += Rational(BigInt(1), BigInt(k - 2 * i) * (k - 2 * i)) * prod;
  }
  const Rational lead = prod * Rational(k - 2 * (n - 1) - 1, k - 2 * (n - 1));
  const PiExpr v = i_recurrence(k - 2 * n).value * lead - PiExpr(bracket);
  return {Family::I, k, v, Route::Unrolled};
}

FamilyValue i_even_closed(int n) {
  if (n < 1) throw std::invalid_argument("i_even_closed: n must be >= 1");
  const Rational a(double_factorial(2 * n - 1), BigInt(8) * double_factorial(2 * n));
  const Rational b = -Rational(double_factorial(2 * n - 1), BigInt(4) * double_factorial(2 * n)) *
                     df_inner_sum(n);
  return {Family::I, 2 * n, PiExpr::term(a, 2) + PiExpr(b), Route::ClosedForm};
}

std::variant<EvenCoeffs, OddCoeffs> i_coeffs(int k) {
  require_nonneg_k(k, "i_coeffs");
  const PiExpr v = i_recurrence(k).value;
  if (k % 2 == 0) {
    const EvenCoeffs c{v.coeff(2), v.coeff(0)};
    if (k >= 2) {
      // a_{2n} must match both the closed form and (1/4) of W's pi coefficient.
      const Rational a8(double_factorial(k - 1), BigInt(8) * double_factorial(k));
      const Rational aw = wallis_closed(k).value.coeff(1) * Rational(1, 4);
      if (c.a != a8 || c.a != aw)
        throw std::logic_error("i_coeffs: pi^2 coefficient disagrees with closed form");
    }
    return c;
  }
  return OddCoeffs{v.coeff(1), v.coeff(0)};
}

FamilyValue j_from_relation(int k) {
  require_nonneg_k(k, "j_from_relation");
  const PiExpr i_k = i_recurrence(k).value;
  const PiExpr w_k = wallis_closed(k).value;
  const bool odd = k % 2 != 0;

  // General form, cancellation and all: (1/4)(I_k + (-1)^{k+1} I_k + (-1)^k pi W_k).
  const PiExpr pi_w = w_k.shifted(1);
  const PiExpr general =
      (i_k + (odd ? i_k : -i_k) + (odd ? -pi_w : pi_w)) * Rational(1, 4);

  PiExpr special;
  if (odd)
    special = i_k * Rational(1, 2) - PiExpr::term(df_ratio(k) * Rational(1, 4), 1);
  else
    special = pi_w * Rational(1, 4);

  if (general != special)
    throw std::logic_error("j_from_relation: general and parity-specialized forms disagree");
  return {Family::J, k, special, Route::CrossRelation};
}

FamilyValue i_even_via_j(int n) {
  if (n < 1) throw std::invalid_argument("i_even_via_j: n must be >= 1");
  const int k = 2 * n;
  const PiExpr j_k = j_from_relation(k).value;

  const Rational correction =
      Rational(double_factorial(k - 1), BigInt(4) * double_factorial(k)) * df_inner_sum(n);
  const PiExpr via_sum = j_k - PiExpr(correction);

  // Central-binomial rewriting J_k (1 - (2/pi^2) sum 2^{2j}/(j^2 C(2j,j))),
  // applied to the rational pi^2 coefficient of J_k directly.
  Rational s2(0);
  for (int j = 1; j <= n; ++j)
    s2 += Rational(BigInt(1) << (2 * j), BigInt(j) * j * binomial(2 * j, j));
  const Rational q = j_k.coeff(2);
  const PiExpr via_binom = PiExpr::term(q, 2) + PiExpr(q * Rational(-2) * s2);

  if (via_sum != via_binom)
    throw std::logic_error("i_even_via_j: double-factorial and central-binomial forms disagree");
  return {Family::I, k, via_sum, Route::CrossRelation};
}

FamilyValue i_even_pascal(int n) {
  if (n < 1) throw std::invalid_argument("i_even_pascal: n must be >= 1");
  PiExpr sum;
  for (int i = 0; i <= n; ++i) sum += Rational(binomial(n, i)) * j_from_relation(i).value;
  const PiExpr v = sum * Rational(BigInt(1), BigInt(1) << n);
  return {Family::I, 2 * n, v, Route::PascalSum};
}

} // namespace cosint
