#include "mlqm/coulomb_bound.hpp"

#include "mlqm/delta_bound.hpp"
#include "mlqm/quadrature.hpp"
#include "mlqm/special.hpp"

#include <cmath>

namespace mlqm::coulomb {

namespace {

constexpr double kSqrtPi = 1.7724538509055160;

double coupling_strength(const ModelParams& params, const Coupling& coupling) {
  return 2.0 * params.mass * coupling.z_e2 / params.hbar; // 2 m Ze^2 / hbar
}

} // namespace

std::complex<double> potential_kernel(double p, double q,
                                      const ModelParams& params,
                                      const Coupling& coupling) {
  double s = 0.0;
  if (p > q) s = 1.0;
  else if (p < q) s = -1.0;
  const double amp = coupling.z_e2 / (2.0 * params.hbar);
  return {0.0, amp * (s + 1.0)};
}

std::complex<double> ode_coefficient(double p, double p0,
                                     const ModelParams& params,
                                     const Coupling& coupling) {
  const double mu2 = params.mu * params.mu;
  const double lorentz = p * p + p0 * p0;
  const double real_part = -(2.0 * p / lorentz + p / mu2);
  const double imag_part = -coupling_strength(params, coupling) *
                           std::exp(-p * p / mu2) / lorentz;
  return {real_part, imag_part};
}

std::complex<double> ode_rhs(double p, std::complex<double> psi, double p0,
                             const ModelParams& params,
                             const Coupling& coupling) {
  return ode_coefficient(p, p0, params, coupling) * psi;
}

Spectrum try_spectral_roots(const ModelParams& params,
                            const Coupling& coupling) {
  const double b = params.hbar * coupling.n / (params.mass * coupling.z_e2);
  const double mu = params.mu;
  Spectrum spec;
  const double ratio = 2.0 / (b * mu); // 2 m z_e2 / (hbar n mu)
  spec.discriminant = 1.0 - ratio * ratio;
  if (spec.discriminant < 0.0) return spec;
  // Quadratic p0^2 - b mu^2 p0 + mu^2 = 0; root product is mu^2, so the
  // small root comes from the large one without cancellation.
  const double p_plus = 0.5 * b * mu * mu * (1.0 + std::sqrt(spec.discriminant));
  const double p_minus = mu * mu / p_plus;
  spec.p0_minus = p_minus;
  spec.p0_plus = p_plus;
  spec.e_minus = -p_minus * p_minus / (2.0 * params.mass);
  spec.e_plus = -p_plus * p_plus / (2.0 * params.mass);
  return spec;
}

Spectrum spectral_roots(const ModelParams& params, const Coupling& coupling) {
  Spectrum spec = try_spectral_roots(params, coupling);
  if (!spec.has_roots())
    throw NoBoundState(
        "spectral_roots: discriminant < 0, level not bound at this mu");
  return spec;
}

ExpansionReport energy_expansions(const ModelParams& params,
                                  const Coupling& coupling) {
  const double m = params.mass;
  const double hbar = params.hbar;
  const double n = coupling.n;
  const double mu = params.mu;
  const double z = coupling.z_e2;
  const double e_classical = -m * z * z / (2.0 * hbar * hbar * n * n);
  const double small = m * z / (hbar * n * mu);  // m z_e2 / (hbar n mu)
  const double large = 1.0 / small;              // hbar n mu / (m z_e2)
  ExpansionReport report;
  report.e_minus_expansion = e_classical * (1.0 - 2.0 * small * small);
  report.e_minus_expansion_derived =
      e_classical * (1.0 + 2.0 * small * small);
  report.e_plus_expansion = -(mu * mu / (2.0 * m)) *
                            (-2.0 + large * large - small * small);
  return report;
}

std::complex<double> psi_closed_form(double p, double p0,
                                     const ModelParams& params,
                                     const Coupling& coupling) {
  if (!(p0 > 0.0)) throw DomainError("psi_closed_form: p0 must be positive");
  const double mu2 = params.mu * params.mu;
  const double norm = delta::normalization_constant(p0, params) *
                      std::exp(-p0 * p0 / (4.0 * mu2));
  const double modulus =
      norm * std::exp(-p * p / (2.0 * mu2)) / (p * p + p0 * p0);
  const double g = coupling_strength(params, coupling); // 2 m z_e2 / hbar
  const double phase =
      g * (p / mu2 -
           (1.0 / p0) * (1.0 + p0 * p0 / mu2) * std::atan(p / p0));
  return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

double phase_winding(double p0, const ModelParams& params,
                     const Coupling& coupling) {
  const double mu2 = params.mu * params.mu;
  return params.mass * coupling.z_e2 / (params.hbar * p0) *
         (1.0 + p0 * p0 / mu2);
}

SingularityTerm singularity_term(double p0, const ModelParams& params,
                                 const Coupling& coupling) {
  SingularityTerm term;
  term.phase_rate = coupling_strength(params, coupling) /
                    (params.mu * params.mu);
  const auto map = quad::IntervalMap::full_line(std::max(params.mu, p0));
  const quad::Tolerance tol{1e-13, 1e-11, 400};
  const double mu2 = params.mu * params.mu;
  term.value = quad::integrate_complex(
      [&](double p) {
        return std::exp(-p * p / (2.0 * mu2)) *
               psi_closed_form(p, p0, params, coupling);
      },
      map, tol);
  const double rate = term.phase_rate;
  term.stripped = quad::integrate_complex(
      [&](double p) {
        const std::complex<double> unwind{std::cos(rate * p),
                                          -std::sin(rate * p)};
        return std::exp(-p * p / (2.0 * mu2)) * unwind *
               psi_closed_form(p, p0, params, coupling);
      },
      map, tol);
  return term;
}

double min_length_bound(int n, const ModelParams& params,
                        const Coupling& coupling) {
  if (n < 1) throw DomainError("min_length_bound: n must be >= 1");
  return params.hbar * params.hbar * n /
         (std::sqrt(2.0) * coupling.z_e2 * params.mass);
}

double v_eff(double x, const ModelParams& params, const Coupling& coupling) {
  const double z = params.mu * x / (2.0 * params.hbar);
  // erfi(z) e^{-z^2} evaluated as the bounded scaled function.
  return -coupling.z_e2 * kSqrtPi * params.mu / (2.0 * params.hbar) *
         sf::erfi_scaled(z);
}

} // namespace mlqm::coulomb
