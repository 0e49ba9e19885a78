#pragma once

#include "mlqm/model.hpp"
#include "mlqm/quadrature.hpp"

#include <complex>
#include <functional>

namespace mlqm::kin {

/// Deformed plane-wave phase q(p) = (sqrt(pi) mu / 2) erf(p/mu).
/// Saturates at +- sqrt(pi) mu / 2: momenta beyond mu stop adding phase.
double localization_phase(double p, const ModelParams& params);

/// Maximal-localization state around position xi, momentum representation:
///   psi_xi(p) = (2 pi hbar)^{-1/2} exp(-i q(p) xi / hbar)
/// States live on the measure dp exp(-p^2/mu^2).
std::complex<double> ml_wavefunction(double p, double xi,
                                     const ModelParams& params);

/// Overlap of two maximal-localization states,
///   <psi_x|psi_y> = sin(sqrt(pi) mu (x-y) / (2 hbar)) / (pi (x-y)),
/// evaluated with a series branch near x = y.  Diagonal value is
/// mu / (2 sqrt(pi) hbar): the states are not unit normalized.
double ml_overlap(double x, double y, const ModelParams& params);

/// Kernel of a position-space potential between deformed plane waves:
///   (1 / 2 pi hbar) int dx v(x) exp(-i (q(p) - q(q')) x / hbar).
/// x_scale hints the decay length of v for the quadrature map.
std::complex<double> generalized_fourier(const std::function<double(double)>& v,
                                         double p, double q,
                                         const ModelParams& params,
                                         double x_scale = 1.0);

/// Closed form of the kernel for v(x) = -kappa delta(x): constant
/// -kappa / (2 pi hbar).
double delta_potential_transform(double kappa, const ModelParams& params);

/// <psi_0| P^2/2m |psi_0> by quadrature over the deformed measure.
double kinetic_expectation(const ModelParams& params);

/// Same expectation in closed form: mu^3 / (8 sqrt(pi) m hbar).
double kinetic_expectation_closed(const ModelParams& params);

} // namespace mlqm::kin
