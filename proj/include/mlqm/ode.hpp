#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace mlqm::oracle {

/// One point of an integrated wavefunction curve.
struct CurveSample {
  double p = 0.0;
  std::complex<double> psi{0.0, 0.0};
};

using OdeRhs =
    std::function<std::complex<double>(double, std::complex<double>)>;

/// Adaptive embedded Runge-Kutta (Cash-Karp 4/5) for a single complex ODE
/// psi' = rhs(p, psi).  Local error per step is kept below
/// tol * max(1, |psi|).  Output is n_samples values on a uniform grid from
/// p_start to p_end inclusive (deterministic regardless of step history);
/// p_end < p_start integrates backwards.  Throws StepUnderflow when the
/// required step collapses below machine resolution.
std::vector<CurveSample> integrate_ode(const OdeRhs& rhs, double p_start,
                                       double p_end,
                                       std::complex<double> psi_start,
                                       double tol = 1e-10,
                                       int n_samples = 201);

} // namespace mlqm::oracle
