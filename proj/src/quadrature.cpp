#include "cosint/quadrature.hpp"

#include <cmath>

namespace cosint {

namespace {

constexpr int kMaxDepth = 50;

struct Worker {
  const std::function<double(double)>& f;
  long evals = 0;
  bool bad_value = false;
  bool depth_exceeded = false;

  double eval(double x) {
    ++evals;
    const double y = f(x);
    if (!std::isfinite(y)) bad_value = true;
    return y;
  }

  // One adaptive step on [a,b]; `whole` is the unsplit Simpson estimate.
  // Accumulates the Richardson error estimate into err_acc.
  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth, double& err_acc) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (bad_value) return left + right;
    // Classical acceptance: |S2 - S1| <= 15 tol, corrected by delta/15.
    // Acceptance is deferred until depth 2 because a mirror-symmetric
    // integrand (cos^4 over a full period, say) can zero out delta at the
    // first split while the estimate is badly wrong; one extra mandatory
    // level breaks any single symmetry axis.
    const bool accept = depth > 1 && std::abs(delta) <= 15.0 * tol;
    if (accept || depth >= kMaxDepth) {
      if (!accept) depth_exceeded = true;
      err_acc += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    const double l = refine(a, m, fa, flm, fm, left, tol / 2.0, depth + 1, err_acc);
    const double r = refine(m, b, fm, frm, fb, right, tol / 2.0, depth + 1, err_acc);
    return l + r;
  }
};

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");

  Worker w{f};
  const double m = 0.5 * (a + b);
  const double fa = w.eval(a);
  const double fm = w.eval(m);
  const double fb = w.eval(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);

  double err = 0.0;
  const double value = w.refine(a, b, fa, fm, fb, whole, tol, 0, err);
  const QuadResult result{value, err, w.evals};
  if (w.bad_value)
    throw QuadratureError("integrate: integrand produced a non-finite value", result);
  if (w.depth_exceeded)
    throw QuadratureError("integrate: depth cap exceeded before tolerance was met", result);
  return result;
}

} // namespace cosint
