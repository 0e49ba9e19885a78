#include "mlqm/ode.hpp"

#include "mlqm/errors.hpp"

#include <cfloat>
#include <cmath>

namespace mlqm::oracle {

namespace {

using Complex = std::complex<double>;

// Cash-Karp tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 3.0 / 10.0, kA42 = -9.0 / 10.0, kA43 = 6.0 / 5.0;
constexpr double kA51 = -11.0 / 54.0, kA52 = 5.0 / 2.0, kA53 = -70.0 / 27.0,
                 kA54 = 35.0 / 27.0;
constexpr double kA61 = 1631.0 / 55296.0, kA62 = 175.0 / 512.0,
                 kA63 = 575.0 / 13824.0, kA64 = 44275.0 / 110592.0,
                 kA65 = 253.0 / 4096.0;
constexpr double kB1 = 37.0 / 378.0, kB3 = 250.0 / 621.0, kB4 = 125.0 / 594.0,
                 kB6 = 512.0 / 1771.0;
constexpr double kE1 = kB1 - 2825.0 / 27648.0, kE3 = kB3 - 18575.0 / 48384.0,
                 kE4 = kB4 - 13525.0 / 55296.0, kE5 = -277.0 / 14336.0,
                 kE6 = kB6 - 1.0 / 4.0;
constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 3.0 / 5.0, kC5 = 1.0,
                 kC6 = 7.0 / 8.0;

struct StepResult {
  Complex y;
  double err; // |y5 - y4| scaled by tolerance weight
};

StepResult ck_step(const OdeRhs& rhs, double p, Complex y, double h,
                   double tol) {
  const Complex k1 = rhs(p, y);
  const Complex k2 = rhs(p + kC2 * h, y + h * (kA21 * k1));
  const Complex k3 = rhs(p + kC3 * h, y + h * (kA31 * k1 + kA32 * k2));
  const Complex k4 =
      rhs(p + kC4 * h, y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
  const Complex k5 = rhs(p + kC5 * h,
                         y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
  const Complex k6 =
      rhs(p + kC6 * h,
          y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
  const Complex y5 = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB6 * k6);
  const Complex delta =
      h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6);
  const double weight = tol * std::fmax(1.0, std::abs(y));
  return {y5, std::abs(delta) / weight};
}

} // namespace

std::vector<CurveSample> integrate_ode(const OdeRhs& rhs, double p_start,
                                       double p_end, Complex psi_start,
                                       double tol, int n_samples) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw DomainError("integrate_ode: tol must be positive");
  if (n_samples < 2) throw DomainError("integrate_ode: need n_samples >= 2");
  if (!std::isfinite(p_start) || !std::isfinite(p_end) || p_start == p_end)
    throw DomainError("integrate_ode: bad interval");

  std::vector<CurveSample> out(n_samples);
  const double span = p_end - p_start;
  for (int i = 0; i < n_samples; ++i)
    out[i].p = p_start + span * i / (n_samples - 1);
  out[0].psi = psi_start;

  const double dir = (span > 0.0) ? 1.0 : -1.0;
  double p = p_start;
  Complex y = psi_start;
  double h = span / (n_samples - 1); // first trial step: one output cell

  for (int i = 1; i < n_samples; ++i) {
    const double target = out[i].p;
    while (true) {
      const double remaining = target - p;
      // Within rounding distance of the node: snap instead of stepping.
      if (dir * remaining <= 4.0 * DBL_EPSILON * (std::abs(target) + 1.0))
        break;
      // Clamp the trial step to the node without shrinking the working step.
      double ht = (std::abs(h) > std::abs(remaining)) ? remaining : h;
      bool accepted = false;
      while (!accepted) {
        if (std::abs(ht) < 32.0 * DBL_EPSILON * (std::abs(p) + 1.0))
          throw StepUnderflow("integrate_ode: step size collapsed");
        const StepResult step = ck_step(rhs, p, y, ht, tol);
        if (step.err <= 1.0) {
          p += ht;
          y = step.y;
          // Grow cautiously; clamp the exponent range.
          const double grow =
              (step.err > 0.0)
                  ? std::fmin(5.0, 0.9 * std::pow(step.err, -0.2))
                  : 5.0;
          h = ht * std::fmax(1.0, grow);
          accepted = true;
        } else {
          ht *= std::fmax(0.2, 0.9 * std::pow(step.err, -0.25));
        }
      }
    }
    p = target; // exact landing, no drift accumulation
    out[i].psi = y;
  }
  return out;
}

} // namespace mlqm::oracle
