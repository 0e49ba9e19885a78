#pragma once

#include "mlqm/model.hpp"

namespace mlqm::delta {

/// Attractive contact potential v(x) = -kappa delta(x), kappa > 0.
struct Coupling {
  double kappa = 1.0;

  explicit Coupling(double kappa_) : kappa(kappa_) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
      throw DomainError("delta::Coupling: kappa must be positive and finite");
  }
};

/// Spectral condition residual
///   F(p0) = (m kappa / (p0 hbar)) exp(p0^2/mu^2) erfc(p0/mu) - 1,
/// strictly decreasing on (0, inf); its unique zero is the bound state.
/// Evaluated through the scaled complement, so no overflow at small mu.
double spectral_residual(double p0, const ModelParams& params,
                         const Coupling& coupling);

/// Asymptotic root (m kappa/hbar) / (1 + 2 m kappa / (hbar sqrt(pi) mu)),
/// used to seed the bracket.
double seed_p0(const ModelParams& params, const Coupling& coupling);

/// True iff the deformation is a small correction: m kappa / (hbar mu) < 1.
/// Asymptotic energy formulas degrade outside this regime.
bool perturbative(const ModelParams& params, const Coupling& coupling);

/// Large-mu energy -(m kappa^2 / 2 hbar^2)(1 - 2 m kappa/(hbar sqrt(pi) mu))^2.
/// Remainder is O(1/mu^2) relative; see energy_asymptotic_derived.
double energy_asymptotic(const ModelParams& params, const Coupling& coupling);

/// Second-order expansion of the exact root,
///   -(m kappa^2/2 hbar^2)(1 - (4/sqrt(pi)) eps + (2 + 12/pi) eps^2),
/// eps = m kappa/(hbar mu); remainder O(1/mu^3) relative.
double energy_asymptotic_derived(const ModelParams& params,
                                 const Coupling& coupling);

/// Unique zero of spectral_residual with energy and normalization filled in.
BoundState solve_bound_state(const ModelParams& params,
                             const Coupling& coupling, double tol = 1e-14);

/// Constant c with int |Psi|^2 dp = 1:
///   c = [sqrt(pi) mu^{-1/2} p0^{-5/2} W_{-3/4,-3/4}(p0^2/mu^2)]^{-1/2}.
double normalization_constant(double p0, const ModelParams& params);

/// Momentum wavefunction c exp(-p0^2/4mu^2) exp(-p^2/2mu^2) / (p^2 + p0^2).
double psi_momentum(double p, const BoundState& state,
                    const ModelParams& params);

/// Exponential decay rate of the quasi-position profile:
///   sqrt(pi) mu erfi(p0/mu) / (2 hbar).
/// Throws OverflowError when p0/mu exceeds the erfi overflow threshold.
double phi_decay_rate(double p0, const ModelParams& params);

/// Quasi-position profile with the conventional prefactor
///   [2 hbar mu^{-1/2} p0^{-9/2} pi^{-5/2} W]^{-1/2} e^{3 p0^2/4mu^2} e^{-rate |x|}.
double phi_position(double x, const BoundState& state,
                    const ModelParams& params);

/// Same profile with the residue-derived prefactor
///   [2 hbar pi^{-1/2} mu^{-1/2} p0^{-1/2} W]^{-1/2},
/// which is the one reproducing the mu -> inf contact-potential limit.
double phi_position_derived(double x, const BoundState& state,
                            const ModelParams& params);

/// Direct quadrature of the generalized inverse transform of psi_momentum:
///   (1/sqrt(2 pi hbar)) int dp e^{-p^2/2mu^2} e^{i q(p) x/hbar} Psi(p).
/// Real by symmetry; the reference the closed forms are measured against.
double phi_position_quadrature(double x, const BoundState& state,
                               const ModelParams& params);

/// Regularized contact potential -(kappa mu / (2 sqrt(pi) hbar)) e^{-(mu x/2 hbar)^2}.
/// Area is -kappa for every mu; depth grows linearly in mu.
double v_eff(double x, const ModelParams& params, const Coupling& coupling);

} // namespace mlqm::delta
