#pragma once

#include "mlqm/errors.hpp"

#include <cmath>

namespace mlqm {

// 2018 CODATA values, used by the SI unit system.
inline constexpr double kSiHbar = 1.054571817e-34;          // J s
inline constexpr double kSiElectronMass = 9.1093837015e-31; // kg
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s

/// Model parameters of the deformed commutator [X,P] = i hbar exp(P^2/mu^2).
/// mu sets the deformation scale; the minimal position uncertainty is hbar/mu.
struct ModelParams {
  double hbar = 1.0;
  double mass = 1.0;
  double mu = 1.0;

  ModelParams(double hbar_, double mass_, double mu_)
      : hbar(hbar_), mass(mass_), mu(mu_) {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw DomainError("ModelParams: hbar must be positive and finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw DomainError("ModelParams: mass must be positive and finite");
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw DomainError("ModelParams: mu must be positive and finite");
  }

  static ModelParams natural(double mu) { return {1.0, 1.0, mu}; }
  static ModelParams si(double mu) { return {kSiHbar, kSiElectronMass, mu}; }

  /// Gaussian measure factor exp(-p^2 / 2 mu^2) attached to each momentum leg.
  double weight(double p) const { return std::exp(-p * p / (2.0 * mu * mu)); }

  /// exp(-(p^2 + q^2) / 2 mu^2), the kernel damping of the integral equation.
  double pair_weight(double p, double q) const {
    return std::exp(-(p * p + q * q) / (2.0 * mu * mu));
  }

  /// Smallest resolvable length scale hbar/mu.
  double minimal_length() const { return hbar / mu; }
};

/// Which spectral condition a bound state solves.
enum class Branch { delta, coulomb_minus, coulomb_plus };

/// A solved bound state: momentum-space pole p0, energy, and the
/// normalization constant of the momentum wavefunction.
struct BoundState {
  double p0 = 0.0;
  double energy = 0.0;
  double norm_const = 0.0;
  Branch branch = Branch::delta;
};

} // namespace mlqm
