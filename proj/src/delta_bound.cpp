#include "mlqm/delta_bound.hpp"

#include "mlqm/kinematics.hpp"
#include "mlqm/quadrature.hpp"
#include "mlqm/roots.hpp"
#include "mlqm/special.hpp"

#include <algorithm>
#include <cmath>

namespace mlqm::delta {

namespace {
constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kPi = 3.141592653589793;
} // namespace

double spectral_residual(double p0, const ModelParams& params,
                         const Coupling& coupling) {
  if (!(p0 > 0.0)) throw DomainError("spectral_residual: p0 must be positive");
  const double strength = params.mass * coupling.kappa / params.hbar;
  return strength / p0 * sf::erfcx(p0 / params.mu) - 1.0;
}

double seed_p0(const ModelParams& params, const Coupling& coupling) {
  const double strength = params.mass * coupling.kappa / params.hbar;
  return strength / (1.0 + 2.0 * strength / (kSqrtPi * params.mu));
}

bool perturbative(const ModelParams& params, const Coupling& coupling) {
  return params.mass * coupling.kappa / (params.hbar * params.mu) < 1.0;
}

double energy_asymptotic(const ModelParams& params, const Coupling& coupling) {
  const double e_classical = -params.mass * coupling.kappa * coupling.kappa /
                             (2.0 * params.hbar * params.hbar);
  const double eps = params.mass * coupling.kappa /
                     (params.hbar * kSqrtPi * params.mu);
  const double factor = 1.0 - 2.0 * eps;
  return e_classical * factor * factor;
}

double energy_asymptotic_derived(const ModelParams& params,
                                 const Coupling& coupling) {
  const double e_classical = -params.mass * coupling.kappa * coupling.kappa /
                             (2.0 * params.hbar * params.hbar);
  const double eps = params.mass * coupling.kappa / (params.hbar * params.mu);
  return e_classical *
         (1.0 - 4.0 / kSqrtPi * eps + (2.0 + 12.0 / kPi) * eps * eps);
}

BoundState solve_bound_state(const ModelParams& params,
                             const Coupling& coupling, double tol) {
  const double seed = seed_p0(params, coupling);
  const double classical = params.mass * coupling.kappa / params.hbar;
  const auto f = [&](double p0) {
    return spectral_residual(p0, params, coupling);
  };
  auto bracket = roots::expand_bracket(f, 0.1 * seed,
                                       10.0 * std::max(seed, classical));
  const auto root = roots::find_root(f, bracket, tol, tol, 200);
  BoundState state;
  state.p0 = root.x;
  state.energy = -root.x * root.x / (2.0 * params.mass);
  state.norm_const = normalization_constant(root.x, params);
  state.branch = Branch::delta;
  return state;
}

double normalization_constant(double p0, const ModelParams& params) {
  if (!(p0 > 0.0))
    throw DomainError("normalization_constant: p0 must be positive");
  const double z = p0 * p0 / (params.mu * params.mu);
  const double w = sf::whittaker_w34(z);
  const double bracket =
      kSqrtPi / std::sqrt(params.mu) * std::pow(p0, -2.5) * w;
  return 1.0 / std::sqrt(bracket);
}

double psi_momentum(double p, const BoundState& state,
                    const ModelParams& params) {
  const double mu2 = params.mu * params.mu;
  return state.norm_const * std::exp(-state.p0 * state.p0 / (4.0 * mu2)) *
         std::exp(-p * p / (2.0 * mu2)) / (p * p + state.p0 * state.p0);
}

double phi_decay_rate(double p0, const ModelParams& params) {
  return kSqrtPi * params.mu * sf::erfi(p0 / params.mu) / (2.0 * params.hbar);
}

namespace {

double phi_profile(double x, const BoundState& state,
                   const ModelParams& params, double prefactor) {
  const double mu2 = params.mu * params.mu;
  const double rate = phi_decay_rate(state.p0, params);
  return prefactor * std::exp(0.75 * state.p0 * state.p0 / mu2) *
         std::exp(-rate * std::abs(x));
}

} // namespace

double phi_position(double x, const BoundState& state,
                    const ModelParams& params) {
  const double w = sf::whittaker_w34(state.p0 * state.p0 /
                                     (params.mu * params.mu));
  const double bracket = 2.0 * params.hbar / std::sqrt(params.mu) *
                         std::pow(state.p0, -4.5) * std::pow(kPi, -2.5) * w;
  return phi_profile(x, state, params, 1.0 / std::sqrt(bracket));
}

double phi_position_derived(double x, const BoundState& state,
                            const ModelParams& params) {
  const double w = sf::whittaker_w34(state.p0 * state.p0 /
                                     (params.mu * params.mu));
  const double bracket = 2.0 * params.hbar /
                         (kSqrtPi * std::sqrt(params.mu * state.p0)) * w;
  return phi_profile(x, state, params, 1.0 / std::sqrt(bracket));
}

double phi_position_quadrature(double x, const BoundState& state,
                               const ModelParams& params) {
  const double mu = params.mu;
  const double hbar = params.hbar;
  const double p0 = state.p0;
  // Psi is even, so only the cosine part of the transform survives.
  const auto map = quad::IntervalMap::full_line(std::max(mu, p0));
  const quad::Tolerance tol{1e-13, 1e-11, 400};
  const double integral = quad::integrate(
      [&](double p) {
        const double q = kin::localization_phase(p, params);
        return std::exp(-p * p / (mu * mu)) * std::cos(q * x / hbar) /
               (p * p + p0 * p0);
      },
      map, tol);
  const double amp = state.norm_const *
                     std::exp(-p0 * p0 / (4.0 * mu * mu)) /
                     std::sqrt(2.0 * kPi * hbar);
  return amp * integral;
}

double v_eff(double x, const ModelParams& params, const Coupling& coupling) {
  const double arg = params.mu * x / (2.0 * params.hbar);
  return -coupling.kappa * params.mu / (2.0 * kSqrtPi * params.hbar) *
         std::exp(-arg * arg);
}

} // namespace mlqm::delta
