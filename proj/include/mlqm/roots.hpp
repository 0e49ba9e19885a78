#pragma once

#include <functional>

namespace mlqm::roots {

/// Bracket [lo, hi] with f(lo) and f(hi) of opposite sign.
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
};

/// Brent's method.  Throws InvalidBracket unless f changes sign on the
/// bracket, NoConvergence past max_iter.  Converges to |hi-lo| below
/// abs_tol + rel_tol*|x|.
RootResult find_root(const std::function<double(double)>& f, RootBracket bracket,
                     double abs_tol = 1e-14, double rel_tol = 1e-14,
                     int max_iter = 200);

/// Expands [lo, hi] geometrically about its midpoint until f changes sign.
/// Throws InvalidBracket if no sign change is found within max_expand steps.
RootBracket expand_bracket(const std::function<double(double)>& f, double lo,
                           double hi, int max_expand = 60);

} // namespace mlqm::roots
