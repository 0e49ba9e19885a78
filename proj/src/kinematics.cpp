#include "mlqm/kinematics.hpp"

#include "mlqm/special.hpp"

#include <cmath>

namespace mlqm::kin {

namespace {
constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kPi = 3.141592653589793;
} // namespace

double localization_phase(double p, const ModelParams& params) {
  return 0.5 * kSqrtPi * params.mu * sf::erf(p / params.mu);
}

std::complex<double> ml_wavefunction(double p, double xi,
                                     const ModelParams& params) {
  const double norm = 1.0 / std::sqrt(2.0 * kPi * params.hbar);
  const double phase = -localization_phase(p, params) * xi / params.hbar;
  return {norm * std::cos(phase), norm * std::sin(phase)};
}

double ml_overlap(double x, double y, const ModelParams& params) {
  const double a = 0.5 * kSqrtPi * params.mu / params.hbar;
  const double d = x - y;
  const double u = a * d;
  if (std::abs(u) < 1e-4) {
    // sin(u)/(pi d) = (a/pi)(1 - u^2/6 + u^4/120 - ...)
    const double u2 = u * u;
    return a / kPi * (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0));
  }
  return std::sin(u) / (kPi * d);
}

std::complex<double> generalized_fourier(const std::function<double(double)>& v,
                                         double p, double q,
                                         const ModelParams& params,
                                         double x_scale) {
  const double omega =
      (localization_phase(p, params) - localization_phase(q, params)) /
      params.hbar;
  const auto map = quad::IntervalMap::full_line(x_scale);
  const quad::Tolerance tol{1e-13, 1e-11, 300};
  const std::complex<double> integral = quad::integrate_complex(
      [&v, omega](double x) -> std::complex<double> {
        const double phase = -omega * x;
        return v(x) * std::complex<double>(std::cos(phase), std::sin(phase));
      },
      map, tol);
  return integral / (2.0 * kPi * params.hbar);
}

double delta_potential_transform(double kappa, const ModelParams& params) {
  return -kappa / (2.0 * kPi * params.hbar);
}

double kinetic_expectation(const ModelParams& params) {
  const double mu = params.mu;
  const auto map = quad::IntervalMap::full_line(mu);
  const quad::Tolerance tol{1e-13, 1e-11, 300};
  const double integral = quad::integrate(
      [mu](double p) { return std::exp(-p * p / (mu * mu)) * p * p; }, map,
      tol);
  return integral / (2.0 * kPi * params.hbar) / (2.0 * params.mass);
}

double kinetic_expectation_closed(const ModelParams& params) {
  const double mu = params.mu;
  return mu * mu * mu / (8.0 * kSqrtPi * params.mass * params.hbar);
}

} // namespace mlqm::kin
