#include "mlqm/roots.hpp"

#include "mlqm/errors.hpp"

#include <cfloat>
#include <cmath>
#include <utility>

namespace mlqm::roots {

RootResult find_root(const std::function<double(double)>& f, RootBracket bracket,
                     double abs_tol, double rel_tol, int max_iter) {
  double a = bracket.lo;
  double b = bracket.hi;
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidBracket("find_root: bracket must be finite with lo < hi");
  if (!(abs_tol > 0.0) || !(rel_tol >= 0.0) || max_iter < 1)
    throw DomainError("find_root: bad tolerance");

  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0))
    throw InvalidBracket("find_root: f does not change sign on bracket");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * DBL_EPSILON * std::abs(b) + 0.5 * (abs_tol + rel_tol * std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, fb, iter};

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation; secant when only two points differ.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::fmin(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw NoConvergence("find_root: Brent iteration limit reached");
}

RootBracket expand_bracket(const std::function<double(double)>& f, double lo,
                           double hi, int max_expand) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidBracket("expand_bracket: need finite lo < hi");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  for (int i = 0; i < max_expand; ++i) {
    if (fa == 0.0) return {a, a};
    if (fb == 0.0) return {b, b};
    if ((fa > 0.0) != (fb > 0.0)) return {a, b};
    const double mid = 0.5 * (a + b);
    const double half = 0.75 * (b - a);
    a = mid - half;
    b = mid + half;
    fa = f(a);
    fb = f(b);
  }
  throw InvalidBracket("expand_bracket: no sign change found");
}

} // namespace mlqm::roots
