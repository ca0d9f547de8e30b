#pragma once

#include "cosint/pi_expr.hpp"

#include <variant>

namespace cosint {

/// The three integral families over [0, pi/2]:
///   W_k = integral of cos^k x,
///   I_k = integral of x cos^k x,
///   J_k = integral of x cos^k 2x.
enum class Family { W, I, J };

/// Independent computational paths. Exact agreement of every applicable
/// route for a given (family, k) is the library's master correctness
/// property; each route transcribes a different identity.
enum class Route {
  ClosedForm,
  Recurrence,
  Unrolled,
  CrossRelation,
  PascalSum,
  SeriesCoefficient,
};

const char* family_name(Family f);
const char* route_name(Route r);

/// Tagged evaluation result. Parity fixes which pi-exponents may be
/// nonzero (see parity_structure_ok).
struct FamilyValue {
  Family family;
  int k;
  PiExpr value;
  Route route;
};

/// Coefficients of I_{2n} = a*pi^2 + b.
struct EvenCoeffs {
  Rational a;
  Rational b;
};

/// Coefficients of I_{2n+1} = c*pi + d.
struct OddCoeffs {
  Rational c;
  Rational d;
};

/// Structural constraint on the value:
///   W even: pi^1 only; W odd: pi^0 only;
///   I even: pi^2, pi^0; I odd: pi^1, pi^0;
///   J even: pi^2 only; J odd: pi^1, pi^0.
bool parity_structure_ok(const FamilyValue& v);

/// W_k by the double-factorial closed form:
/// ((k-1)!!/k!!)(pi/2) for even k, (k-1)!!/k!! for odd k.
FamilyValue wallis_closed(int k);

/// W_k by iterating W_k = (k-1)/k * W_{k-2} up from W_0 = pi/2, W_1 = 1.
FamilyValue wallis_recurrence(int k);

/// I_k by iterating I_k = (k-1)/k * I_{k-2} - 1/k^2 up from
/// I_0 = pi^2/8, I_1 = pi/2 - 1.
FamilyValue i_recurrence(int k);

/// I_k by the n-step unrolled recurrence
///   I_k = I_{k-2n} * prod_{j=0}^{n-1} (k-2j-1)/(k-2j)
///         - (1/k^2 + sum_{i=1}^{n-1} 1/(k-2i)^2 prod_{j=0}^{i-1} (k-2j-1)/(k-2j)),
/// transcribed index-for-index (the i-sum is empty when n = 1).
/// Requires n >= 1 and k >= 2n; throws std::invalid_argument otherwise.
FamilyValue i_unrolled(int k, int n);

/// I_{2n} for n >= 1 from the closed coefficients
///   a_{2n} = (1/8)(2n-1)!!/(2n)!!,
///   b_{2n} = -((2n-1)!!/(4(2n)!!)) sum_{j=1}^{n} (1/j^2)(2j)!!/(2j-1)!!.
/// Throws std::invalid_argument for n = 0 (I_0 is a base case, b_0 = 0).
FamilyValue i_even_closed(int n);

/// (a, b) for even k or (c, d) for odd k, extracted from i_recurrence(k).
std::variant<EvenCoeffs, OddCoeffs> i_coeffs(int k);

/// J_k via the I/W cross relation. Both the general form
///   J_k = (1/4)(I_k + (-1)^{k+1} I_k + (-1)^k pi W_k)
/// and the parity-specialized form ((pi/4) W_k for even k,
/// (1/2) I_k - ((k-1)!!/k!!)(pi/4) for odd k) are evaluated and must
/// agree exactly; the general form's I_k - I_k cancellation is exercised
/// on purpose.
FamilyValue j_from_relation(int k);

/// I_{2n} for n >= 1 as J_{2n} minus the double-factorial sum, checked
/// against the equivalent central-binomial form
///   I_k = J_k (1 - (2/pi^2) sum_{j=1}^{k/2} 2^{2j}/(j^2 C(2j,j)))
/// evaluated on the rational pi^2 coefficient of J_k.
FamilyValue i_even_via_j(int n);

/// I_{2n} for n >= 1 as the binomial-weighted sum (1/2^n) sum C(n,i) J_i
/// over J_0..J_n of mixed parity.
FamilyValue i_even_pascal(int n);

} // namespace cosint
