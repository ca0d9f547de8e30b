#pragma once

#include "cosint/families.hpp"
#include "cosint/quadrature.hpp"

#include <iosfwd>
#include <vector>

namespace cosint {

enum class ReportFamily { W, I, J, SectorAvg };

const char* report_family_name(ReportFamily f);

/// One exact-vs-quadrature comparison. pass holds iff abs_diff <= the
/// tolerance the comparison was run with; a quadrature failure is recorded
/// in `note` with the best estimate, never thrown.
struct VerificationReport {
  ReportFamily family;
  int k_or_i;
  double exact_float = 0.0;
  QuadResult quad;
  double abs_diff = 0.0;
  bool pass = false;
  std::string note; // empty on a clean run
};

/// One report per k in 0..k_max comparing the family's exact value against
/// quadrature of the matching integrand (W: cos^k x, I: x cos^k x,
/// J: x cos^k 2x, all over [0, pi/2]). The internal quadrature tolerance is
/// fixed at 1e-12; tol is the comparison threshold only.
std::vector<VerificationReport> verify_family(Family fam, int k_max, double tol);

/// One report per i in 0..i_max for the average sector area:
/// exact pi-expression vs (1/pi) * quadrature of x cos^2 x (1-cos x)^{2i}.
std::vector<VerificationReport> verify_sector_avg(int i_max, double tol);

/// Result of the exact route-equality sweep: checks counts individual
/// comparisons, failures holds one human-readable line per mismatch (or
/// per exception escaping a route).
struct RouteCheckSummary {
  int k_max = 0;
  long checks = 0;
  std::vector<std::string> failures;
};

/// Runs every applicable route per family for k in 0..k_max and demands
/// bit-identical pi-expressions: W closed form vs recurrence (vs series for
/// even k), I recurrence vs unrolled for every valid step count vs the even
/// closed form, J-detour and Pascal sum, J cross relation vs series. Also
/// asserts the parity structure of each primary value.
RouteCheckSummary check_route_equality(int k_max);

/// Line-oriented text, one report per line.
void write_reports_text(const std::vector<VerificationReport>& reports, std::ostream& os,
                        int precision);

/// Machine-readable CSV with header "family,k,exact,quad,diff,pass".
void write_reports_csv(const std::vector<VerificationReport>& reports, std::ostream& os,
                       int precision);

} // namespace cosint
