#pragma once

#include "mlqm/model.hpp"

#include <complex>
#include <optional>

namespace mlqm::coulomb {

/// Attractive Coulomb potential v(x) = -z_e2 / x with principal quantum
/// number n for the spectral condition.
struct Coupling {
  double z_e2 = 1.0;
  int n = 1;

  Coupling(double z_e2_, int n_) : z_e2(z_e2_), n(n_) {
    if (!(z_e2 > 0.0) || !std::isfinite(z_e2))
      throw DomainError("coulomb::Coupling: z_e2 must be positive and finite");
    if (n < 1) throw DomainError("coulomb::Coupling: n must be >= 1");
  }
};

/// Both roots of the spectral quadratic p0^2/mu^2 - (hbar n / m z_e2) p0 + 1 = 0.
/// Roots are absent when the discriminant 1 - (2 m z_e2 / hbar n mu)^2 is
/// negative (deformation too strong for this n).  When present,
/// p0_minus <= p0_plus, p0_minus * p0_plus = mu^2, and e = -p0^2/2m.
struct Spectrum {
  double discriminant = 0.0;
  std::optional<double> p0_minus;
  std::optional<double> p0_plus;
  std::optional<double> e_minus;
  std::optional<double> e_plus;

  bool has_roots() const { return p0_minus.has_value(); }
};

/// Large-mu expansions of both branch energies.  Two variants of the minus
/// branch are carried: the conventional closed form (correction -2 eps^2,
/// eps = m z_e2 / hbar n mu) and the independently derived one (+2 eps^2).
/// The exact roots side with the derived sign; both are reported, neither
/// is silently corrected.
struct ExpansionReport {
  double e_minus_expansion = 0.0;
  double e_plus_expansion = 0.0;
  double e_minus_expansion_derived = 0.0;
};

/// Quadrature value of the stripped-singularity integral
/// S = int e^{-p^2/2mu^2} Psi(p) dp, with diagnostics.
struct SingularityTerm {
  std::complex<double> value;    // defining integral
  std::complex<double> stripped; // same with the linear phase factor removed
  double phase_rate = 0.0;       // 2 m z_e2 / (hbar mu^2), the limit-form rate
};

/// Momentum-space kernel (i z_e2 / 2 hbar) [sign(p - q) + 1], with
/// sign(0) = 0.  sign(erf(p/mu) - erf(q/mu)) collapses to sign(p - q)
/// because erf is strictly increasing.
std::complex<double> potential_kernel(double p, double q,
                                      const ModelParams& params,
                                      const Coupling& coupling);

/// Logarithmic-derivative coefficient a(p) of the first-order closure
///   Psi'(p) = a(p) Psi(p),
///   a(p) = -[2p/(p^2+p0^2) + p/mu^2 + (2 m i z_e2/hbar) e^{-p^2/mu^2}/(p^2+p0^2)].
std::complex<double> ode_coefficient(double p, double p0,
                                     const ModelParams& params,
                                     const Coupling& coupling);

/// Right-hand side a(p) * psi for the numerical integrator.
std::complex<double> ode_rhs(double p, std::complex<double> psi, double p0,
                             const ModelParams& params,
                             const Coupling& coupling);

/// Both spectral roots; throws NoBoundState when the discriminant is
/// negative.  Stable form: p0_plus by the plus branch, p0_minus = mu^2/p0_plus.
Spectrum spectral_roots(const ModelParams& params, const Coupling& coupling);

/// Same, but reports absent roots instead of throwing.
Spectrum try_spectral_roots(const ModelParams& params,
                            const Coupling& coupling);

/// Branch-energy expansions in both sign conventions (see ExpansionReport).
ExpansionReport energy_expansions(const ModelParams& params,
                                  const Coupling& coupling);

/// Closed-form wavefunction of a solved branch:
///   N e^{-p^2/2mu^2} / (p^2+p0^2) *
///   exp(i (2 m z_e2/hbar) [p/mu^2 - (1/p0)(1 + p0^2/mu^2) arctan(p/p0)])
/// with N the unit-normalizing constant.  The modulus is exactly
/// N e^{-p^2/2mu^2}/(p^2+p0^2); every other factor is pure phase.
std::complex<double> psi_closed_form(double p, double p0,
                                     const ModelParams& params,
                                     const Coupling& coupling);

/// The arctan-phase winding (m z_e2 / hbar p0)(1 + p0^2/mu^2); equals n
/// exactly when p0 solves the spectral quadratic.
double phase_winding(double p0, const ModelParams& params,
                     const Coupling& coupling);

/// Quadrature of the singularity integral for a solved branch.
SingularityTerm singularity_term(double p0, const ModelParams& params,
                                 const Coupling& coupling);

/// Upper bound on the minimal length for level n to stay bound:
///   hbar^2 n / (sqrt(2) z_e2 m).
double min_length_bound(int n, const ModelParams& params,
                        const Coupling& coupling);

/// Regularized Coulomb potential
///   -(z_e2 sqrt(pi) mu / 2 hbar) erfi(z) e^{-z^2},  z = mu x / 2 hbar,
/// evaluated through the bounded scaled product (no overflow).  Odd in x,
/// zero at the origin, -z_e2/x at long range.
double v_eff(double x, const ModelParams& params, const Coupling& coupling);

} // namespace mlqm::coulomb
