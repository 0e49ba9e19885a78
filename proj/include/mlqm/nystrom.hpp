#pragma once

#include "mlqm/coulomb_bound.hpp"
#include "mlqm/delta_bound.hpp"
#include "mlqm/eigen_dense.hpp"
#include "mlqm/model.hpp"
#include "mlqm/quadrature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mlqm::oracle {

/// Momentum-space kernel V(p, p') packaged for discretization, together
/// with the deformation weight exp(-(p^2+p'^2)/2mu^2) of the model.
struct PotentialKernel {
  std::string label;
  std::function<Complex(double, double)> v;

  static PotentialKernel free_particle();
  static PotentialKernel delta(const ModelParams& params,
                               const delta::Coupling& coupling);
  static PotentialKernel coulomb(const ModelParams& params,
                                 const coulomb::Coupling& coupling);
  /// Coulomb direct kernel plus the full-line singularity term at the weight
  /// it carries in the integrated first-order equation; this operator has a
  /// genuinely complex point eigenvalue fixed by a phase-winding relation.
  static PotentialKernel coulomb_with_source(const ModelParams& params,
                                             const coulomb::Coupling& coupling);
};

/// Eigen-solve summary of one discretization.
struct NystromResult {
  int grid_size = 0;
  std::vector<double> energies; // real parts, ascending
  double ground_energy = 0.0;
  double ground_imag = 0.0;   // imaginary part of the ground eigenvalue
  double residual_norm = 0.0; // ||H v - lambda v|| / ||v|| for the ground pair
};

/// Composite Gauss rule on [-P, P], P = max(8 mu, 20 p0_est), with dyadic
/// panels refined toward the origin so both the Lorentzian scale p0_est and
/// the Gaussian scale mu are resolved.  Total node count equals grid_size.
quad::QuadratureRule momentum_grid(const ModelParams& params, double p0_est,
                                   int grid_size);

/// H_ij = (p_i^2/2m) delta_ij + w_j exp(-(p_i^2+p_j^2)/2mu^2) V(p_i, p_j),
/// rows assembled in parallel.
CMatrix assemble(const PotentialKernel& kernel, const ModelParams& params,
                 const quad::QuadratureRule& grid);

/// Reference implementation of assemble: identical arithmetic, no threading.
CMatrix assemble_serial(const PotentialKernel& kernel,
                        const ModelParams& params,
                        const quad::QuadratureRule& grid);

/// Discretize, eigen-solve, and extract the ground state with its residual.
NystromResult nystrom_solve(const PotentialKernel& kernel,
                            const ModelParams& params,
                            const quad::QuadratureRule& grid);

/// nystrom_solve at grid_size and at 2*grid_size; throws GridTooCoarse when
/// doubling moves the ground energy by more than 10*tol (absolute, tol
/// scaled by |ground|).  Returns the finer result.
NystromResult nystrom_solve_checked(const PotentialKernel& kernel,
                                    const ModelParams& params, double p0_est,
                                    int grid_size, double tol);

} // namespace mlqm::oracle
