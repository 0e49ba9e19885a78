#include <cmath>

#include "doctest.h"
#include "mlqm/delta_bound.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/model.hpp"
#include "mlqm/quadrature.hpp"
#include "mlqm/roots.hpp"
#include "test_util.hpp"

using namespace mlqm;
using testutil::rel_err;

namespace {
const delta::Coupling kUnit{1.0};
}

TEST_CASE("coupling constructor rejects non-positive strengths") {
  CHECK_THROWS_AS(delta::Coupling{-1.0}, DomainError);
  CHECK_THROWS_AS(delta::Coupling{0.0}, DomainError);
  CHECK_NOTHROW(delta::Coupling{2.5});
}

TEST_CASE("spectral residual is strictly decreasing with a sign change") {
  const auto params = ModelParams::natural(2.0);
  double prev = delta::spectral_residual(0.05, params, kUnit);
  for (double p0 = 0.1; p0 <= 3.0; p0 += 0.05) {
    const double cur = delta::spectral_residual(p0, params, kUnit);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(delta::spectral_residual(0.05, params, kUnit) > 0.0);
  CHECK(delta::spectral_residual(3.0, params, kUnit) < 0.0);
}

TEST_CASE("spectral residual survives extreme deformation without overflow") {
  // p0/mu ~ 1e4 would overflow a naive exp(p0^2/mu^2) erfc(p0/mu) product.
  const auto params = ModelParams::natural(1e-4);
  CHECK(std::isfinite(delta::spectral_residual(1.0, params, kUnit)));
}

TEST_CASE("bound state matches frozen roots across the mu range") {
  // 50-digit reference roots of the spectral condition.
  struct Row {
    double mu, p0, energy;
  };
  const Row rows[] = {
      {2.0, 0.7011348478331139181279, -0.2457950374229819043672},
      {10.0, 0.9054981134503330660074, -0.4099634167310561260926},
      {20.0, 0.9486501716712435979115, -0.4499685741059399746667},
      {40.0, 0.9731297217232360554887, -0.4734907276505714216564},
      {80.0, 0.9862399242965615687473, -0.4863345941382437470666},
      {1e4, 0.9998871848101133239868, -0.4998871911737468585702},
  };
  for (const auto& row : rows) {
    const auto params = ModelParams::natural(row.mu);
    const auto state = delta::solve_bound_state(params, kUnit);
    CHECK(rel_err(state.p0, row.p0) < 1e-13);
    CHECK(rel_err(state.energy, row.energy) < 1e-13);
    CHECK(std::abs(delta::spectral_residual(state.p0, params, kUnit)) < 1e-12);
    CHECK(state.branch == Branch::delta);
  }
}

TEST_CASE("bound state agrees with an independent bisection solve") {
  for (double mu : {2.0, 17.0, 300.0}) {
    const auto params = ModelParams::natural(mu);
    const auto state = delta::solve_bound_state(params, kUnit);
    double lo = 1e-8, hi = 2.0;
    for (int i = 0; i < 120; ++i) {
      const double mid = 0.5 * (lo + hi);
      (delta::spectral_residual(mid, params, kUnit) > 0.0 ? lo : hi) = mid;
    }
    CHECK(rel_err(state.p0, 0.5 * (lo + hi)) < 1e-13);
  }
}

TEST_CASE("energy equals minus p0 squared over twice the mass") {
  const auto params = ModelParams::natural(7.0);
  const auto state = delta::solve_bound_state(params, kUnit);
  CHECK(state.energy == -state.p0 * state.p0 / (2.0 * params.mass));
}

TEST_CASE("asymptotic energies match their frozen expansions") {
  struct Row {
    double mu, first, second;
  };
  const Row rows[] = {
      {2.0, -0.0949653595441390488208, -0.6632752457279297203586},
      {10.0, -0.3935282810141245560411, -0.4162606764614761829027},
      {20.0, -0.4451725910761433246629, -0.4508556899379812313783},
      {40.0, -0.472188408180341923992, -0.4736091828958014006709},
      {80.0, -0.4859947322507385274112, -0.4863499259296033965809},
  };
  for (const auto& row : rows) {
    const auto params = ModelParams::natural(row.mu);
    CHECK(rel_err(delta::energy_asymptotic(params, kUnit), row.first) < 1e-14);
    CHECK(rel_err(delta::energy_asymptotic_derived(params, kUnit), row.second) <
          1e-14);
  }
}

TEST_CASE("second-order expansion beats first order in the large-mu regime") {
  for (double mu : {10.0, 20.0, 40.0, 80.0}) {
    const auto params = ModelParams::natural(mu);
    const double exact = delta::solve_bound_state(params, kUnit).energy;
    const double e1 = std::abs(delta::energy_asymptotic(params, kUnit) - exact);
    const double e2 =
        std::abs(delta::energy_asymptotic_derived(params, kUnit) - exact);
    CHECK(e2 < e1);
  }
}

TEST_CASE("perturbative flag flips at the deformation scale") {
  CHECK_FALSE(delta::perturbative(ModelParams::natural(0.5), kUnit));
  CHECK(delta::perturbative(ModelParams::natural(10.0), kUnit));
}

TEST_CASE("seed lands on the right side structure for bracketing") {
  const auto params = ModelParams::natural(5.0);
  const double seed = delta::seed_p0(params, kUnit);
  const double root = delta::solve_bound_state(params, kUnit).p0;
  CHECK(seed > 0.0);
  CHECK(std::abs(seed - root) < 0.5 * root);
}

TEST_CASE("classical limit recovers the contact-potential ground state") {
  const auto params = ModelParams::natural(1e6);
  const auto state = delta::solve_bound_state(params, kUnit);
  // -m kappa^2 / 2 hbar^2 = -1/2 in natural units; gap frozen at 1.1e-6.
  CHECK(std::abs(state.energy + 0.5) < 1.2e-6);
  CHECK(rel_err(state.energy, -0.4999988716237427556654) < 1e-13);
}

TEST_CASE("momentum wavefunction is normalized") {
  for (double mu : {2.0, 15.0}) {
    const auto params = ModelParams::natural(mu);
    const auto state = delta::solve_bound_state(params, kUnit);
    const double norm = quad::integrate(
        [&](double p) {
          const double v = delta::psi_momentum(p, state, params);
          return v * v;
        },
        quad::IntervalMap::full_line(std::min(mu, state.p0)),
        quad::Tolerance{1e-13, 1e-12, 300});
    CHECK(std::abs(norm - 1.0) < 1e-10);
  }
}

TEST_CASE("normalization constant matches the whittaker closed form") {
  const auto params = ModelParams::natural(5.0);
  const auto state = delta::solve_bound_state(params, kUnit);
  CHECK(rel_err(state.p0, 0.8361106620160112870007) < 1e-13);
  CHECK(rel_err(state.norm_const,
                delta::normalization_constant(state.p0, params)) < 1e-14);
}

TEST_CASE("decay rate follows the scaled imaginary error function") {
  const auto params = ModelParams::natural(4.0);
  // rate = sqrt(pi) mu erfi(p0/mu) / 2 with erfi(1/2) frozen.
  const double rate = delta::phi_decay_rate(2.0, params);
  CHECK(rel_err(rate, 0.5 * 1.7724538509055160273 * 4.0 *
                          0.6149520946965109808397) < 1e-13);
}

TEST_CASE("decay rate guards against erfi overflow") {
  const auto params = ModelParams::natural(1e-2);
  CHECK_THROWS_AS((void)delta::phi_decay_rate(1.0, params), OverflowError);
}

TEST_CASE("quasi-position profile decays exponentially in |x|") {
  const auto params = ModelParams::natural(3.0);
  const auto state = delta::solve_bound_state(params, kUnit);
  const double rate = delta::phi_decay_rate(state.p0, params);
  const double r10 = delta::phi_position(1.0, state, params) /
                     delta::phi_position(0.0, state, params);
  CHECK(rel_err(r10, std::exp(-rate)) < 1e-12);
  CHECK(delta::phi_position(0.7, state, params) ==
        delta::phi_position(-0.7, state, params));
  // Both prefactor conventions share the decay profile.
  const double d10 = delta::phi_position_derived(1.0, state, params) /
                     delta::phi_position_derived(0.0, state, params);
  CHECK(rel_err(d10, std::exp(-rate)) < 1e-12);
}

TEST_CASE("derived prefactor tracks the quadrature profile off the origin") {
  const auto params = ModelParams::natural(10.0);
  const auto state = delta::solve_bound_state(params, kUnit);
  // Frozen ratios closed/quadrature at x = 1, 2 are 1.00426 and 0.97329:
  // the closed form drops a branch-cut contribution, so agreement is a few
  // percent at moderate mu, not machine precision.
  for (double x : {1.0, 2.0}) {
    const double quadv = delta::phi_position_quadrature(x, state, params);
    const double closed = delta::phi_position_derived(x, state, params);
    CHECK(rel_err(closed, quadv) < 0.05);
    CHECK(rel_err(closed, quadv) > 1e-4);
  }
}

TEST_CASE("effective potential has frozen depth and exact area") {
  const auto params = ModelParams::natural(2.0);
  // Depth at the origin: -kappa mu / (2 sqrt(pi) hbar) = -1/sqrt(pi) at mu=2.
  CHECK(rel_err(delta::v_eff(0.0, params, kUnit),
                -0.5641895835477562869481) < 1e-14);
  for (double mu : {1.0, 2.0, 5.0, 10.0}) {
    const auto p = ModelParams::natural(mu);
    const double area = quad::integrate(
        [&](double x) { return delta::v_eff(x, p, kUnit); },
        quad::IntervalMap::full_line(2.0 / mu),
        quad::Tolerance{1e-13, 1e-12, 300});
    CHECK(std::abs(area + kUnit.kappa) < 1e-10);
  }
}
