#include "mlqm/special.hpp"

#include "mlqm/errors.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

namespace mlqm::sf {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126; // 2/sqrt(pi)
constexpr double kInvSqrtPi = 0.5641895835477563;     // 1/sqrt(pi)

// erf(x) * exp(x^2) * sqrt(pi)/2 as a positive-term series:
//   sum_k 2^k x^{2k+1} / (2k+1)!!
// Every term is positive, so no cancellation for any real x.
double erf_scaled_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 500; ++k) {
    term *= 2.0 * x2 / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) <= DBL_EPSILON * std::abs(sum)) return sum;
  }
  throw NoConvergence("erf series did not converge");
}

// Continued fraction for erfcx(x), x >= 1 (modified Lentz):
//   erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfcx_cf(double x) {
  const double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < 300; ++j) {
    const double a = (j == 1) ? 1.0 : 0.5 * (j - 1);
    const double b = x;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < DBL_EPSILON) return kInvSqrtPi * f;
  }
  throw NoConvergence("erfcx continued fraction did not converge");
}

} // namespace

double erfcx(double x) {
  if (std::isnan(x)) throw DomainError("erfcx: nan argument");
  if (x >= 1.0) return erfcx_cf(x);
  if (x >= 0.0) {
    // exp(x^2)(1 - erf(x)); both terms O(1) on [0,1).
    return std::exp(x * x) - kTwoOverSqrtPi * erf_scaled_series(x);
  }
  // erfcx(x) = 2 exp(x^2) - erfcx(-x); grows like exp(x^2).
  const double x2 = x * x;
  if (x2 > std::log(DBL_MAX) - 1.0)
    throw OverflowError("erfcx overflows for large negative argument");
  return 2.0 * std::exp(x2) - erfcx(-x);
}

double erf(double x) {
  if (std::isnan(x)) throw DomainError("erf: nan argument");
  const double ax = std::abs(x);
  if (ax < 3.0)
    return kTwoOverSqrtPi * std::exp(-x * x) * erf_scaled_series(x);
  const double tail = std::exp(-ax * ax) * erfcx_cf(ax); // = erfc(|x|)
  return x > 0.0 ? 1.0 - tail : tail - 1.0;
}

double erfc(double x) {
  if (std::isnan(x)) throw DomainError("erfc: nan argument");
  if (x >= 0.0) return std::exp(-x * x) * erfcx(x);
  return 2.0 - std::exp(-x * x) * erfcx(-x);
}

double dawson(double x) {
  if (std::isnan(x)) throw DomainError("dawson: nan argument");
  const double ax = std::abs(x);
  const double sign = (x < 0.0) ? -1.0 : 1.0;
  if (ax < 6.0) {
    // exp(-x^2) sum_k x^{2k+1} / (k! (2k+1)); positive terms.
    const double x2 = ax * ax;
    double power = ax; // x^{2k+1} / k!
    double sum = ax;
    for (int k = 1; k < 500; ++k) {
      power *= x2 / k;
      const double term = power / (2.0 * k + 1.0);
      sum += term;
      if (term <= DBL_EPSILON * sum)
        return sign * std::exp(-x2) * sum;
    }
    throw NoConvergence("dawson series did not converge");
  }
  // Asymptotic: (1/2x) sum_k (2k-1)!!/(2x^2)^k, truncated at the
  // smallest term.  Accurate to ~1e-15 for |x| >= 6.
  const double inv2x2 = 1.0 / (2.0 * ax * ax);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double next = term * (2.0 * k - 1.0) * inv2x2;
    if (next >= term) break; // divergent tail reached
    term = next;
    sum += term;
    if (term < DBL_EPSILON * sum) break;
  }
  return sign * sum / (2.0 * ax);
}

double erfi_overflow_threshold() {
  static const double t = std::sqrt(std::log(DBL_MAX) - 10.0);
  return t;
}

double erfi(double x) {
  if (std::isnan(x)) throw DomainError("erfi: nan argument");
  const double ax = std::abs(x);
  if (ax > erfi_overflow_threshold())
    throw OverflowError("erfi overflows: |x| exceeds threshold");
  if (ax < 6.0) {
    // (2/sqrt(pi)) sum_k x^{2k+1} / (k! (2k+1)); positive terms.
    const double x2 = ax * ax;
    double power = ax;
    double sum = ax;
    for (int k = 1; k < 500; ++k) {
      power *= x2 / k;
      const double term = power / (2.0 * k + 1.0);
      sum += term;
      if (term <= DBL_EPSILON * sum) break;
    }
    return kTwoOverSqrtPi * (x < 0.0 ? -sum : sum);
  }
  return std::exp(x * x) * kTwoOverSqrtPi * dawson(x);
}

double erfi_scaled(double x) { return kTwoOverSqrtPi * dawson(x); }

double whittaker_w34(double z) {
  if (!(z > 0.0)) throw DomainError("whittaker_w34 requires z > 0");
  // After u = sqrt(z) v the representation reads
  //   W(z) = (2 exp(-z/2) z^{-3/4} / sqrt(pi)) int_0^inf exp(-u^2) (1 + u^2/z)^{-2} du
  // with an O(1)-scaled integrand whose support is ~ min(1, sqrt(z)).
  const double scale = std::sqrt(z / (1.0 + z));
  const auto map = quad::IntervalMap::semi_infinite(0.0, scale);
  const quad::Tolerance tol{1e-14, 3e-12, 400};
  const double integral = quad::integrate(
      [z](double u) {
        const double w = 1.0 + u * u / z;
        return std::exp(-u * u) / (w * w);
      },
      map, tol);
  return 2.0 * std::exp(-0.5 * z) * std::pow(z, -0.75) * kInvSqrtPi * integral;
}

} // namespace mlqm::sf
