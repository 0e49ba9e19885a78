#include <cmath>
#include <complex>

#include "doctest.h"
#include "mlqm/coulomb_bound.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/model.hpp"
#include "mlqm/ode.hpp"
#include "test_util.hpp"

using namespace mlqm;
using testutil::rel_err;
using Complex = std::complex<double>;

TEST_CASE("exponential decay integrates to machine-level accuracy") {
  const auto curve = oracle::integrate_ode(
      [](double, Complex psi) { return -psi; }, 0.0, 3.0, 1.0, 1e-12, 61);
  CHECK(curve.size() == std::size_t{61});
  CHECK(curve.front().p == 0.0);
  CHECK(curve.back().p == 3.0);
  for (const auto& s : curve)
    CHECK(rel_err(s.psi.real(), std::exp(-s.p)) < 1e-10);
}

TEST_CASE("rotating phase keeps unit modulus") {
  const auto curve = oracle::integrate_ode(
      [](double, Complex psi) { return Complex(0.0, 2.0) * psi; }, 0.0, 5.0,
      1.0, 1e-12, 41);
  for (const auto& s : curve) {
    CHECK(std::abs(std::abs(s.psi) - 1.0) < 1e-10);
    CHECK(std::abs(s.psi - std::polar(1.0, 2.0 * s.p)) < 1e-9);
  }
}

TEST_CASE("backward integration retraces the forward curve") {
  const auto fwd = oracle::integrate_ode(
      [](double p, Complex psi) { return Complex(-p, 0.5) * psi; }, 0.0, 2.0,
      1.0, 1e-12, 21);
  const auto bwd = oracle::integrate_ode(
      [](double p, Complex psi) { return Complex(-p, 0.5) * psi; }, 2.0, 0.0,
      fwd.back().psi, 1e-12, 21);
  CHECK(std::abs(bwd.back().psi - 1.0) < 1e-9);
  CHECK(bwd.front().p == 2.0);
  CHECK(bwd.back().p == 0.0);
}

TEST_CASE("sample grid is uniform and inclusive of both endpoints") {
  const auto curve = oracle::integrate_ode(
      [](double, Complex) { return Complex(0.0, 0.0); }, -1.0, 1.0, 1.0,
      1e-10, 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(curve[i].p - (-1.0 + 0.5 * i)) < 1e-15);
    CHECK(std::abs(curve[i].psi - Complex(1.0, 0.0)) < 1e-15);
  }
}

TEST_CASE("step collapse raises instead of looping") {
  // 1/(1-p) blows up inside the range; the controller must give up.
  CHECK_THROWS_AS((void)oracle::integrate_ode(
                      [](double p, Complex psi) {
                        return psi / (1.0 - p) / (1.0 - p);
                      },
                      0.0, 2.0, 1.0, 1e-10, 11),
                  StepUnderflow);
}

TEST_CASE("first-order equation vs closed form splits phase from modulus") {
  // The closed form shares the exact modulus dynamics of the full equation
  // (their coefficients differ only in the imaginary part), so integrating
  // psi' = a(p) psi from the origin must reproduce |psi| to integrator
  // accuracy while the complex deviation carries the O((p/mu)^4) phase gap.
  const auto params = ModelParams::natural(10.0);
  const coulomb::Coupling c{1.0, 1};
  const auto spec = coulomb::spectral_roots(params, c);
  const double p0 = *spec.p0_minus;
  const auto start = coulomb::psi_closed_form(0.0, p0, params, c);
  const auto curve = oracle::integrate_ode(
      [&](double p, Complex psi) {
        return coulomb::ode_rhs(p, psi, p0, params, c);
      },
      0.0, 5.0 * p0, start, 1e-11, 101);
  double worst_complex = 0.0, worst_modulus = 0.0;
  for (const auto& s : curve) {
    const auto closed = coulomb::psi_closed_form(s.p, p0, params, c);
    worst_complex =
        std::max(worst_complex, std::abs(s.psi - closed) / std::abs(closed));
    worst_modulus = std::max(worst_modulus,
                             std::abs(std::abs(s.psi) - std::abs(closed)) /
                                 std::abs(closed));
  }
  // Frozen complex deviation at mu = 10 is 3.72e-3 (the phase gap).
  CHECK(worst_complex < 5e-3);
  CHECK(worst_complex > 1e-3);
  CHECK(worst_modulus < 1e-9);
}
