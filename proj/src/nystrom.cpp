#include "mlqm/nystrom.hpp"

#include "mlqm/errors.hpp"
#include "mlqm/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace mlqm::oracle {

namespace {

void fill_row(CMatrix& h, int i, const PotentialKernel& kernel,
              const ModelParams& params, const quad::QuadratureRule& grid) {
  const int n = static_cast<int>(grid.nodes.size());
  const double pi = grid.nodes[i];
  for (int j = 0; j < n; ++j) {
    const double pj = grid.nodes[j];
    h(i, j) = grid.weights[j] * params.pair_weight(pi, pj) * kernel.v(pi, pj);
  }
  h(i, i) += pi * pi / (2.0 * params.mass);
}

} // namespace

PotentialKernel PotentialKernel::free_particle() {
  return {"free", [](double, double) { return Complex(0.0); }};
}

PotentialKernel PotentialKernel::delta(const ModelParams& params,
                                       const delta::Coupling& coupling) {
  const double value = kin::delta_potential_transform(coupling.kappa, params);
  return {"delta", [value](double, double) { return Complex(value); }};
}

PotentialKernel PotentialKernel::coulomb(const ModelParams& params,
                                         const coulomb::Coupling& coupling) {
  return {"coulomb", [params, coupling](double p, double q) {
            return coulomb::potential_kernel(p, q, params, coupling);
          }};
}

PotentialKernel PotentialKernel::coulomb_with_source(
    const ModelParams& params, const coulomb::Coupling& coupling) {
  // Direct kernel plus the full-line singularity term with the weight it
  // carries in the integrated first-order equation: [sign(p-q)+1] -> +3.
  const double pref = coupling.z_e2 / (2.0 * params.hbar);
  return {"coulomb+source", [pref](double p, double q) {
            const double sg = (p > q) ? 1.0 : (p < q ? -1.0 : 0.0);
            return Complex(0.0, pref) * (sg + 3.0);
          }};
}

quad::QuadratureRule momentum_grid(const ModelParams& params, double p0_est,
                                   int grid_size) {
  if (!(p0_est > 0.0) || !std::isfinite(p0_est))
    throw DomainError("momentum_grid: p0_est must be positive");
  if (grid_size < 4) throw DomainError("momentum_grid: grid_size too small");
  const double p_max = std::max(8.0 * params.mu, 20.0 * p0_est);
  double s = 0.5 * std::min(p0_est, params.mu);

  std::vector<double> edges{0.0, s};
  while (edges.back() < p_max && static_cast<int>(edges.size()) < 50) {
    const double next = 2.0 * edges.back();
    edges.push_back(std::min(next, p_max));
  }
  // Mirror to the negative axis.
  std::vector<double> full;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) full.push_back(-*it);
  for (std::size_t k = 1; k < edges.size(); ++k) full.push_back(edges[k]);

  const int n_panels = static_cast<int>(full.size()) - 1;
  if (grid_size < 2 * n_panels)
    throw GridTooCoarse("momentum_grid: fewer than two nodes per panel");

  // Node budget per panel: flat base, remainder to the innermost panels.
  std::vector<int> counts(n_panels, grid_size / n_panels);
  int rem = grid_size % n_panels;
  std::vector<int> order(n_panels);
  for (int k = 0; k < n_panels; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ca = std::abs(0.5 * (full[a] + full[a + 1]));
    const double cb = std::abs(0.5 * (full[b] + full[b + 1]));
    if (ca != cb) return ca < cb;
    return a < b;
  });
  for (int k = 0; k < rem; ++k) ++counts[order[k]];

  quad::QuadratureRule rule;
  rule.map = quad::IntervalMap::finite(full.front(), full.back());
  for (int k = 0; k < n_panels; ++k) {
    const auto panel = quad::QuadratureRule::gauss_legendre(
        counts[k], quad::IntervalMap::finite(full[k], full[k + 1]));
    rule.nodes.insert(rule.nodes.end(), panel.nodes.begin(),
                      panel.nodes.end());
    rule.weights.insert(rule.weights.end(), panel.weights.begin(),
                        panel.weights.end());
  }
  return rule;
}

CMatrix assemble(const PotentialKernel& kernel, const ModelParams& params,
                 const quad::QuadratureRule& grid) {
  const int n = static_cast<int>(grid.nodes.size());
  CMatrix h(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) fill_row(h, i, kernel, params, grid);
  return h;
}

CMatrix assemble_serial(const PotentialKernel& kernel,
                        const ModelParams& params,
                        const quad::QuadratureRule& grid) {
  const int n = static_cast<int>(grid.nodes.size());
  CMatrix h(n);
  for (int i = 0; i < n; ++i) fill_row(h, i, kernel, params, grid);
  return h;
}

NystromResult nystrom_solve(const PotentialKernel& kernel,
                            const ModelParams& params,
                            const quad::QuadratureRule& grid) {
  const int n = static_cast<int>(grid.nodes.size());
  if (n < 2) throw DomainError("nystrom_solve: empty grid");
  const CMatrix h = assemble(kernel, params, grid);
  std::vector<Complex> eig;
  try {
    eig = eigen_dense(h);
  } catch (const NoConvergence& e) {
    throw EigenFailure(e.what());
  }

  NystromResult result;
  result.grid_size = n;
  result.energies.reserve(eig.size());
  for (const auto& z : eig) result.energies.push_back(z.real());
  std::sort(result.energies.begin(), result.energies.end());

  Complex ground = eig.front();
  for (const auto& z : eig)
    if (z.real() < ground.real()) ground = z;

  // Inverse iteration plus Rayleigh-quotient refinement sharpens the QR
  // eigenvalue past its O(eps*||H||) backward-error floor.
  const auto v = eigenvector_for(h, ground);
  const Complex refined = rayleigh_quotient(h, v);
  result.ground_energy = refined.real();
  result.ground_imag = refined.imag();
  result.residual_norm = residual_norm(h, refined, v);
  return result;
}

NystromResult nystrom_solve_checked(const PotentialKernel& kernel,
                                    const ModelParams& params, double p0_est,
                                    int grid_size, double tol) {
  if (!(tol > 0.0)) throw DomainError("nystrom_solve_checked: bad tol");
  const auto coarse =
      nystrom_solve(kernel, params, momentum_grid(params, p0_est, grid_size));
  const auto fine = nystrom_solve(
      kernel, params, momentum_grid(params, p0_est, 2 * grid_size));
  const double drift = std::abs(fine.ground_energy - coarse.ground_energy);
  if (drift > 10.0 * tol * std::max(1.0, std::abs(fine.ground_energy)))
    throw GridTooCoarse("nystrom_solve_checked: ground energy not settled");
  return fine;
}

} // namespace mlqm::oracle
