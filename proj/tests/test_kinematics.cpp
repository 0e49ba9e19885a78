#include <cmath>
#include <complex>

#include "doctest.h"
#include "mlqm/kinematics.hpp"
#include "mlqm/model.hpp"
#include "mlqm/quadrature.hpp"
#include "test_util.hpp"

using namespace mlqm;
using testutil::rel_err;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("localization phase follows the scaled error function") {
  const auto params = ModelParams::natural(3.0);
  // q(p) = (sqrt(pi) mu / 2) erf(p/mu) with erf(1) frozen from references.
  const double expect = 0.5 * kSqrtPi * 3.0 * 0.8427007929497148693412;
  CHECK(rel_err(kin::localization_phase(3.0, params), expect) < 1e-14);
  CHECK(kin::localization_phase(0.0, params) == 0.0);
  CHECK(kin::localization_phase(-3.0, params) ==
        -kin::localization_phase(3.0, params));
}

TEST_CASE("localization phase saturates at sqrt(pi) mu / 2") {
  const auto params = ModelParams::natural(2.0);
  const double cap = 0.5 * kSqrtPi * 2.0;
  CHECK(rel_err(kin::localization_phase(1e3, params), cap) < 1e-14);
  CHECK(kin::localization_phase(40.0, params) <= cap);
}

TEST_CASE("ml wavefunction has flat modulus and the advertised phase") {
  const auto params = ModelParams::natural(5.0);
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  for (double p : {-7.0, 0.0, 1.3}) {
    const auto v = kin::ml_wavefunction(p, 0.8, params);
    CHECK(rel_err(std::abs(v), norm) < 1e-14);
    const double q = kin::localization_phase(p, params);
    CHECK(std::abs(std::arg(v) - std::arg(std::polar(1.0, -q * 0.8))) < 1e-12);
  }
}

TEST_CASE("ml overlap matches the frozen quadrature value") {
  const auto params = ModelParams::natural(3.0);
  CHECK(rel_err(kin::ml_overlap(0.0, 0.7, params),
                0.4357042589398117879619) < 1e-13);
}

TEST_CASE("ml overlap diagonal equals mu over 2 sqrt(pi) hbar") {
  const auto params = ModelParams::natural(3.0);
  CHECK(rel_err(kin::ml_overlap(1.3, 1.3, params),
                0.8462843753216344304221) < 1e-14);
  CHECK(rel_err(kin::ml_overlap(0.0, 0.0, params),
                3.0 / (2.0 * kSqrtPi)) < 1e-14);
}

TEST_CASE("ml overlap series branch is continuous across the diagonal") {
  const auto params = ModelParams::natural(4.0);
  const double on = kin::ml_overlap(0.5, 0.5, params);
  const double near = kin::ml_overlap(0.5, 0.5 + 1e-9, params);
  CHECK(std::abs(on - near) < 1e-8);
}

TEST_CASE("ml overlap agrees with direct quadrature at random separations") {
  testutil::Rng rng(71);
  for (int k = 0; k < 6; ++k) {
    const double mu = rng.uniform(0.5, 20.0);
    const double x = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-3.0, 3.0);
    const auto params = ModelParams::natural(mu);
    // <psi_x|psi_y> over the deformed measure dp e^{-p^2/mu^2}.
    const double quadv =
        quad::integrate(
            [&](double p) {
              const double q = kin::localization_phase(p, params);
              return std::exp(-p * p / (mu * mu)) * std::cos(q * (x - y));
            },
            quad::IntervalMap::full_line(mu),
            quad::Tolerance{1e-14, 1e-12, 300}) /
        (2.0 * kPi);
    CHECK(std::abs(quadv - kin::ml_overlap(x, y, params)) < 1e-10);
  }
}

TEST_CASE("generalized fourier transform of a delta matches the constant") {
  const auto params = ModelParams::natural(4.0);
  const double kappa = 1.7;
  const double expect = kin::delta_potential_transform(kappa, params);
  CHECK(rel_err(expect, -kappa / (2.0 * kPi)) < 1e-14);
  // A narrow gaussian approaches the delta kernel at any momentum pair.
  const double w = 1e-4;
  const auto v = kin::generalized_fourier(
      [kappa, w](double x) {
        return -kappa * std::exp(-x * x / (2.0 * w * w)) /
               (w * std::sqrt(2.0 * kPi));
      },
      1.2, -0.4, params, w);
  CHECK(rel_err(v.real(), expect) < 1e-6);
  CHECK(std::abs(v.imag()) < 1e-8);
}

TEST_CASE("kinetic expectation quadrature matches the closed constant") {
  for (double mu : {1.0, 3.0}) {
    const auto params = ModelParams::natural(mu);
    const double quadv = kin::kinetic_expectation(params);
    const double closed = kin::kinetic_expectation_closed(params);
    CHECK(rel_err(quadv, closed) < 1e-12);
    // mu^3 / (8 sqrt(pi) m hbar), frozen constant at mu = 1.
    CHECK(rel_err(closed, 0.07052369794346953586851 * mu * mu * mu) < 1e-14);
  }
}
