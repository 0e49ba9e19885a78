#include "mlqm/verify.hpp"

#include "mlqm/coulomb_bound.hpp"
#include "mlqm/delta_bound.hpp"
#include "mlqm/eigen_dense.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/kinematics.hpp"
#include "mlqm/model.hpp"
#include "mlqm/nystrom.hpp"
#include "mlqm/ode.hpp"
#include "mlqm/quadrature.hpp"
#include "mlqm/roots.hpp"
#include "mlqm/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <utility>

namespace mlqm::verify {

namespace {

using Complex = std::complex<double>;

constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kPi = 3.141592653589793;

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// splitmix64-driven uniforms: identical stream on every platform, unlike
// the standard distribution classes.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : state_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

 private:
  double next01() {
    state_ += 0x9E3779B97F4A7C15ULL;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  unsigned long long state_;
};

// Plain bisection, independent of the Brent solver under test.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iters = 120) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

class Suite {
 public:
  explicit Suite(const Options& opt) : opt_(opt) {}

  const Options& opt() const { return opt_; }
  Report take() { return std::move(report_); }

  template <typename F>
  void check(const char* name, F&& body) {
    CheckResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  // measured <= limit -> pass, else fail.
  static void gate(CheckResult& r, double measured, double limit) {
    r.measured = measured;
    if (!(measured <= limit)) r.status = Status::fail;
    if (r.detail.empty())
      r.detail = "measured " + fmt(measured) + ", limit " + fmt(limit);
  }

 private:
  Options opt_;
  Report report_;
};

double ode_closed_deviation(double mu) {
  const auto params = ModelParams::natural(mu);
  const coulomb::Coupling coupling{1.0, 1};
  const auto spec = coulomb::spectral_roots(params, coupling);
  const double p0 = *spec.p0_minus;
  const auto rhs = [&](double p, Complex psi) {
    return coulomb::ode_rhs(p, psi, p0, params, coupling);
  };
  const Complex psi0 = coulomb::psi_closed_form(0.0, p0, params, coupling);
  double dev = 0.0;
  for (const double side : {1.0, -1.0}) {
    const auto curve =
        oracle::integrate_ode(rhs, 0.0, side * 5.0 * p0, psi0, 1e-12, 201);
    for (const auto& s : curve) {
      const Complex closed =
          coulomb::psi_closed_form(s.p, p0, params, coupling);
      dev = std::max(dev, std::abs(s.psi - closed));
    }
  }
  return dev;
}

void add_special_function_checks(Suite& s) {
  s.check("erf-complement-consistency", [](CheckResult& r) {
    double worst = 0.0;
    for (const double x : {-4.5, -3.0, -2.2, -1.5, -0.7, 0.0, 0.3, 0.9, 1.1,
                           1.7, 2.5, 3.3, 4.5}) {
      worst = std::max(worst, std::abs(sf::erf(x) + sf::erfc(x) - 1.0));
      worst = std::max(worst, std::abs(sf::erf(x) + sf::erf(-x)));
    }
    Suite::gate(r, worst, 1e-13);
  });

  s.check("erfi-dawson-consistency", [](CheckResult& r) {
    double worst = 0.0;
    for (const double x : {0.25, 0.5, 1.0, 2.0, 3.0, 4.5, 5.5, 5.9}) {
      const double a = sf::erfi(x) * std::exp(-x * x);
      const double b = sf::erfi_scaled(x);
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    Suite::gate(r, worst, 1e-12);
  });

  s.check("quad-gaussian-fullline", [](CheckResult& r) {
    const double v = quad::integrate(
        [](double x) { return std::exp(-x * x); },
        quad::IntervalMap::full_line(1.0), quad::Tolerance{1e-14, 1e-13, 200});
    Suite::gate(r, std::abs(v - kSqrtPi) / kSqrtPi, 1e-12);
  });

  s.check("roots-brent-reference", [](CheckResult& r) {
    const auto root = roots::find_root(
        [](double x) { return x * x - 2.0; }, {0.0, 2.0}, 1e-15, 1e-15, 100);
    Suite::gate(r, std::abs(root.x - std::sqrt(2.0)), 1e-14);
  });

  s.check("gradshteyn-whittaker-identity", [&s](CheckResult& r) {
    Rng rng(s.opt().seed ^ 0x67261ULL);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double mu = rng.uniform(1.0, 50.0);
      const double p0 = rng.uniform(0.1, 2.0 * mu);
      const double lhs = quad::integrate(
          [mu, p0](double p) {
            const double l = p * p + p0 * p0;
            return std::exp(-p * p / (mu * mu)) / (l * l);
          },
          quad::IntervalMap::semi_infinite(0.0, std::min(mu, p0)),
          quad::Tolerance{1e-14, 1e-12, 300});
      const double z = p0 * p0 / (mu * mu);
      const double rhs = 0.5 * kSqrtPi / std::sqrt(mu) * std::pow(p0, -2.5) *
                         std::exp(0.5 * z) * sf::whittaker_w34(z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    Suite::gate(r, worst, 1e-8);
  });

  s.check("whittaker-small-z-asymptote", [](CheckResult& r) {
    const double z = 1e-6;
    const double w = sf::whittaker_w34(z);
    const double asym = std::sqrt(0.25 * kPi) * std::pow(z, -0.25);
    Suite::gate(r, std::abs(w / asym - 1.0), 1e-4);
  });
}

void add_kinematics_checks(Suite& s) {
  s.check("ml-overlap-quadrature", [&s](CheckResult& r) {
    Rng rng(s.opt().seed ^ 0x3a11ULL);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double mu = rng.uniform(0.5, 20.0);
      const double x = rng.uniform(-3.0, 3.0);
      const double y = rng.uniform(-3.0, 3.0);
      const auto params = ModelParams::natural(mu);
      const double quadv = quad::integrate(
          [&](double p) {
            const double q = kin::localization_phase(p, params);
            return std::exp(-p * p / (mu * mu)) * std::cos(q * (x - y));
          },
          quad::IntervalMap::full_line(mu),
          quad::Tolerance{1e-14, 1e-12, 300}) /
          (2.0 * kPi);
      worst = std::max(worst, std::abs(quadv - kin::ml_overlap(x, y, params)));
    }
    Suite::gate(r, worst, 1e-10);
  });

  s.check("ml-overlap-diagonal", [](CheckResult& r) {
    double worst = 0.0;
    for (const double mu : {0.5, 1.0, 3.0, 10.0}) {
      const auto params = ModelParams::natural(mu);
      const double expected = mu / (2.0 * kSqrtPi);
      worst = std::max(
          worst, std::abs(kin::ml_overlap(0.37, 0.37, params) - expected) /
                     expected);
    }
    Suite::gate(r, worst, 1e-14);
  });

  s.check("kinetic-expectation-quadrature", [](CheckResult& r) {
    double worst = 0.0;
    for (const double mu : {1.0, 3.0, 10.0}) {
      const auto params = ModelParams::natural(mu);
      const double q = kin::kinetic_expectation(params);
      const double c = kin::kinetic_expectation_closed(params);
      worst = std::max(worst, std::abs(q - c) / c);
    }
    Suite::gate(r, worst, 1e-10);
  });

  s.check("kinetic-alternate-constant", [](CheckResult& r) {
    r.status = Status::info;
    const auto params = ModelParams::natural(1.0);
    const double q = kin::kinetic_expectation(params);
    const double alt = 1.0 / (16.0 * kSqrtPi); // mu^{3/2}/(16 sqrt(pi) m hbar)
    r.measured = q / alt;
    r.detail = "quadrature mu^3/(8 sqrt(pi) m hbar) = " + fmt(q, "%.12g") +
               "; documented alternate constant mu^{3/2}/(16 sqrt(pi) m hbar)"
               " = " +
               fmt(alt, "%.12g") + "; ratio " + fmt(q / alt) +
               " (= 2 mu^{3/2}); quadrature value is returned";
  });

  s.check("generalized-fourier-gaussian", [](CheckResult& r) {
    // v(x) = exp(-x^2) against its closed transform sqrt(pi) e^{-w^2/4}/(2 pi hbar).
    const auto params = ModelParams::natural(2.0);
    double worst = 0.0;
    for (const double p : {0.0, 0.5, 1.3}) {
      for (const double q : {-0.4, 0.8}) {
        const Complex got = kin::generalized_fourier(
            [](double x) { return std::exp(-x * x); }, p, q, params, 1.0);
        const double w = (kin::localization_phase(p, params) -
                          kin::localization_phase(q, params)) /
                         params.hbar;
        const Complex want{kSqrtPi * std::exp(-0.25 * w * w) / (2.0 * kPi),
                           0.0};
        worst = std::max(worst, std::abs(got - want));
      }
    }
    Suite::gate(r, worst, 1e-10);
  });
}

void add_delta_checks(Suite& s) {
  const delta::Coupling kap{1.0};

  s.check("delta-spectral-residual", [&](CheckResult& r) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double mu = 2.0 * std::pow(1e4 / 2.0, k / 19.0);
      const auto params = ModelParams::natural(mu);
      const auto state = delta::solve_bound_state(params, kap);
      worst = std::max(worst,
                       std::abs(delta::spectral_residual(state.p0, params, kap)));
    }
    Suite::gate(r, worst, 1e-10);
  });

  s.check("delta-root-vs-bisection", [&](CheckResult& r) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double mu = 2.0 * std::pow(1e4 / 2.0, k / 19.0);
      const auto params = ModelParams::natural(mu);
      const auto state = delta::solve_bound_state(params, kap);
      const double ref = bisect(
          [&](double p) { return delta::spectral_residual(p, params, kap); },
          1e-6, 10.0);
      worst = std::max(worst, std::abs(state.p0 - ref) / ref);
    }
    Suite::gate(r, worst, 1e-12);
  });

  s.check("delta-root-below-classical", [&](CheckResult& r) {
    double worst = 0.0;
    for (const double mu : {2.0, 5.0, 10.0, 100.0, 1e4}) {
      const auto params = ModelParams::natural(mu);
      const auto state = delta::solve_bound_state(params, kap);
      worst = std::max(worst, state.p0); // classical root is 1 in these units
    }
    r.detail = "largest root " + fmt(worst, "%.12g") + " vs classical 1";
    Suite::gate(r, worst, 1.0 - 1e-12);
  });

  s.check("delta-spectral-uniqueness", [&](CheckResult& r) {
    int worst = 0;
    for (const double mu : {2.0, 10.0, 100.0}) {
      const auto params = ModelParams::natural(mu);
      int changes = 0;
      double prev = delta::spectral_residual(1e-4, params, kap);
      for (int i = 1; i <= 2000; ++i) {
        const double p = 1e-4 * std::pow(10.0 / 1e-4, i / 2000.0);
        const double cur = delta::spectral_residual(p, params, kap);
        if ((cur > 0.0) != (prev > 0.0)) ++changes;
        prev = cur;
      }
      worst = std::max(worst, std::abs(changes - 1));
    }
    Suite::gate(r, worst, 0.0);
  });

  s.check("delta-energy-ordering", [&](CheckResult& r) {
    double prev_e = 0.0;
    double worst = -1.0; // max of E(next) - E(prev): must stay negative
    bool first = true;
    for (const double mu : {2.0, 5.0, 10.0, 50.0, 1e3}) {
      const auto params = ModelParams::natural(mu);
      const double e = delta::solve_bound_state(params, kap).energy;
      if (!first) worst = std::max(worst, e - prev_e);
      if (e >= 0.0) worst = 1.0;
      prev_e = e;
      first = false;
    }
    r.detail = "binding strictly deepens as mu grows; largest step " +
               fmt(worst);
    Suite::gate(r, worst, 0.0);
  });

  s.check("delta-normalization", [&s](CheckResult& r) {
    Rng rng(s.opt().seed ^ 0xde17aULL);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double mu = rng.uniform(0.8, 30.0);
      const double kappa = rng.uniform(0.3, 3.0);
      const auto params = ModelParams::natural(mu);
      const delta::Coupling c{kappa};
      const auto state = delta::solve_bound_state(params, c);
      const double norm = quad::integrate(
          [&](double p) {
            const double v = delta::psi_momentum(p, state, params);
            return v * v;
          },
          quad::IntervalMap::full_line(std::min(mu, state.p0)),
          quad::Tolerance{1e-13, 1e-12, 300});
      worst = std::max(worst, std::abs(norm - 1.0));
    }
    Suite::gate(r, worst, 1e-8);
  });

  s.check("delta-classical-energy", [&](CheckResult& r) {
    const auto params = ModelParams::natural(1e6);
    const auto state = delta::solve_bound_state(params, kap);
    Suite::gate(r, std::abs(state.energy + 0.5), 1e-5);
  });

  s.check("delta-classical-psi", [&](CheckResult& r) {
    const auto params = ModelParams::natural(1e6);
    const auto state = delta::solve_bound_state(params, kap);
    double worst = 0.0;
    for (const double p : {0.0, 0.5, 1.0, 2.0}) {
      const double classical =
          std::sqrt(2.0 / kPi) / (p * p + 1.0); // p0 -> m kappa/hbar = 1
      worst = std::max(
          worst, std::abs(delta::psi_momentum(p, state, params) - classical));
    }
    Suite::gate(r, worst, 1e-4);
  });

  s.check("delta-classical-phi", [&](CheckResult& r) {
    const auto params = ModelParams::natural(1e6);
    const auto state = delta::solve_bound_state(params, kap);
    double worst = 0.0;
    for (const double x : {0.0, 0.5, 1.0, 2.0}) {
      const double classical = std::exp(-std::abs(x)); // sqrt(m kappa)/hbar = 1
      worst = std::max(worst, std::abs(delta::phi_position_derived(
                                  x, state, params) -
                              classical));
    }
    Suite::gate(r, worst, 1e-4);
  });

  s.check("delta-asymptotic-order", [&](CheckResult& r) {
    r.status = Status::info;
    double gap_printed[4];
    double gap_derived[4];
    const double mus[4] = {10.0, 20.0, 40.0, 80.0};
    for (int i = 0; i < 4; ++i) {
      const auto params = ModelParams::natural(mus[i]);
      const double e = delta::solve_bound_state(params, kap).energy;
      gap_printed[i] =
          std::abs(e - delta::energy_asymptotic(params, kap)) / std::abs(e);
      gap_derived[i] =
          std::abs(e - delta::energy_asymptotic_derived(params, kap)) /
          std::abs(e);
    }
    r.measured = gap_printed[0] / gap_printed[1];
    r.detail = "halving contraction of the large-mu energy error: "
               "first-order closed form " +
               fmt(gap_printed[0] / gap_printed[1]) + ", " +
               fmt(gap_printed[1] / gap_printed[2]) + ", " +
               fmt(gap_printed[2] / gap_printed[3]) +
               " (second-order remainder, ratio -> 4); "
               "second-order expansion " +
               fmt(gap_derived[0] / gap_derived[1]) + ", " +
               fmt(gap_derived[1] / gap_derived[2]) + ", " +
               fmt(gap_derived[2] / gap_derived[3]) +
               " (third-order remainder, ratio -> 8)";
  });

  s.check("phi-prefactor-convention", [&](CheckResult& r) {
    r.status = Status::info;
    const auto params = ModelParams::natural(5.0);
    const auto state = delta::solve_bound_state(params, kap);
    const double q0 = delta::phi_position_quadrature(0.0, state, params);
    const double ratio_printed = delta::phi_position(0.0, state, params) / q0;
    const double ratio_derived =
        delta::phi_position_derived(0.0, state, params) / q0;
    const double erfc_ratio = sf::erfc(state.p0 / params.mu);
    std::string devs = "residue-derived/quadrature at x=1,2: ";
    for (const double x : {1.0, 2.0}) {
      devs += fmt(delta::phi_position_derived(x, state, params) /
                  delta::phi_position_quadrature(x, state, params)) +
              " ";
    }
    r.measured = ratio_printed;
    r.detail =
        "closed/quadrature at x=0: conventional prefactor " +
        fmt(ratio_printed) + ", residue-derived " + fmt(ratio_derived) +
        "; dropped branch-cut integral accounts for 1/erfc(p0/mu) = " +
        fmt(1.0 / erfc_ratio) + "; " + devs +
        "(conventional form kept in phi_position, derived form restores the "
        "large-mu limit)";
  });

  s.check("delta-veff-area", [&](CheckResult& r) {
    double worst = 0.0;
    for (const double mu : {1.0, 2.0, 5.0, 10.0}) {
      const auto params = ModelParams::natural(mu);
      const double area = quad::integrate(
          [&](double x) { return delta::v_eff(x, params, kap); },
          quad::IntervalMap::full_line(2.0 / mu),
          quad::Tolerance{1e-13, 1e-12, 300});
      worst = std::max(worst, std::abs(area + kap.kappa));
    }
    Suite::gate(r, worst, 1e-10);
  });

  s.check("delta-veff-depth", [&](CheckResult& r) {
    double worst = 0.0;
    for (const double mu : {1.0, 2.0, 5.0, 10.0}) {
      const auto params = ModelParams::natural(mu);
      const double depth = -kap.kappa * mu / (2.0 * kSqrtPi);
      worst = std::max(worst,
                       std::abs(delta::v_eff(0.0, params, kap) - depth));
    }
    Suite::gate(r, worst, 1e-15);
  });
}

void add_nystrom_checks(Suite& s) {
  const bool coarse = s.opt().grid_size < 100;

  s.check("nystrom-free-spectrum", [](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const auto grid = oracle::momentum_grid(params, 1.0, 200);
    const auto result =
        oracle::nystrom_solve(oracle::PotentialKernel::free_particle(),
                              params, grid);
    Suite::gate(r, std::max(0.0, -result.ground_energy), 1e-10);
  });

  s.check("nystrom-delta-ground", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const delta::Coupling kap{1.0};
    const double exact = delta::solve_bound_state(params, kap).energy;
    const auto result = oracle::nystrom_solve(
        oracle::PotentialKernel::delta(params, kap),
        params, oracle::momentum_grid(params, 0.9, s.opt().grid_size));
    const double rel = std::abs(result.ground_energy - exact) / std::abs(exact);
    r.detail = "ground " + fmt(result.ground_energy, "%.12g") + " vs exact " +
               fmt(exact, "%.12g") + ", residual " +
               fmt(result.residual_norm) + ", grid " +
               fmt(double(result.grid_size), "%.0f");
    if (coarse) {
      r.status = Status::warn;
      r.measured = rel;
      r.detail += " (coarse grid, informational)";
      return;
    }
    r.measured = rel;
    if (!(rel <= 1e-6 && result.residual_norm <= 1e-8))
      r.status = Status::fail;
  });

  s.check("nystrom-delta-refinement", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const delta::Coupling kap{1.0};
    const auto kernel = oracle::PotentialKernel::delta(params, kap);
    double g[3];
    const int sizes[3] = {100, 200, 400};
    for (int i = 0; i < 3; ++i)
      g[i] = oracle::nystrom_solve(kernel, params,
                                   oracle::momentum_grid(params, 0.9, sizes[i]))
                 .ground_energy;
    const double d1 = std::abs(g[0] - g[1]);
    const double d2 = std::abs(g[1] - g[2]);
    r.detail = "refinement steps " + fmt(d1) + " then " + fmt(d2);
    Suite::gate(r, d2 / d1, 1.0);
  });

  s.check("nystrom-delta-variational", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const delta::Coupling kap{1.0};
    const double exact = delta::solve_bound_state(params, kap).energy;
    const auto result = oracle::nystrom_solve(
        oracle::PotentialKernel::delta(params, kap),
        params, oracle::momentum_grid(params, 0.9, 400));
    // Discretized ground sits above the exact energy up to residual error.
    Suite::gate(r, exact - result.ground_energy, 1e-6);
  });

  s.check("nystrom-coulomb-ground", [&](CheckResult& r) {
    // The source-augmented Coulomb operator has a genuinely complex point
    // eigenvalue.  Integrating its first-order equation across the full line
    // forces the accumulated phase
    //   Theta(p0) = (2 m z_e2 / hbar) Int e^{-t^2/mu^2} / (t^2 + p0^2) dt
    // to satisfy exp(-i Theta) = 2, i.e. Theta = 2 pi n + i ln 2.  Solving
    // that relation by complex secant is independent of the discretization,
    // so it cross-checks the eigensolver end to end.
    const auto params = ModelParams::natural(20.0);
    const coulomb::Coupling cou{1.0, 1};
    const auto theta = [&](Complex p0) {
      const Complex p0sq = p0 * p0;
      const double inv_mu2 = 1.0 / (params.mu * params.mu);
      const Complex integral = quad::integrate_complex(
          [&](double t) {
            return std::exp(-t * t * inv_mu2) / (t * t + p0sq);
          },
          quad::IntervalMap::full_line(1.0), quad::Tolerance{1e-13, 1e-12, 400});
      return 2.0 * params.mass * cou.z_e2 / params.hbar * integral;
    };
    const Complex target(2.0 * kPi, std::log(2.0));
    Complex x0(0.94, -0.08), x1(0.95, -0.11);
    Complex f0 = theta(x0) - target, f1 = theta(x1) - target;
    for (int it = 0; it < 60 && std::abs(f1) > 1e-12; ++it) {
      const Complex df = f1 - f0;
      if (df == Complex(0.0, 0.0)) break;
      const Complex next = x1 - f1 * (x1 - x0) / df;
      x0 = x1;
      f0 = f1;
      x1 = next;
      f1 = theta(x1) - target;
    }
    if (!(std::abs(f1) <= 1e-10)) {
      r.status = Status::fail;
      r.measured = std::abs(f1);
      r.detail = "phase-winding secant did not converge";
      return;
    }
    const Complex predicted = -x1 * x1 / (2.0 * params.mass);

    const auto kernel = oracle::PotentialKernel::coulomb_with_source(params, cou);
    const int base = (3 * s.opt().grid_size) / 2; // 600 at the default 400
    // The mu = 20 grid spans 20 dyadic panels, so anything under 40 nodes
    // cannot be built at all; floor the ladder instead of throwing so coarse
    // runs still produce a (warning-grade) measurement.
    const int sizes[3] = {std::max(48, base / 4), std::max(48, base / 2),
                          std::max(48, base)};
    double dev[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      const auto result = oracle::nystrom_solve(
          kernel, params, oracle::momentum_grid(params, 1.0, sizes[i]));
      const Complex ground(result.ground_energy, result.ground_imag);
      dev[i] = std::abs(ground - predicted) / std::abs(predicted);
    }
    const double quadratic = *coulomb::spectral_roots(params, cou).e_minus;
    r.detail = "winding eigenvalue (" + fmt(predicted.real(), "%.9g") + ", " +
               fmt(predicted.imag(), "%.9g") + "), deviation trend " +
               fmt(dev[0]) + " -> " + fmt(dev[1]) + " -> " + fmt(dev[2]) +
               "; quadratic-formula branch " + fmt(quadratic, "%.9g") +
               " sits " +
               fmt(std::abs(predicted - quadratic) / std::abs(quadratic)) +
               " away in modulus and is not an eigenvalue";
    if (coarse) {
      r.status = Status::warn;
      r.measured = dev[2];
      r.detail += " (coarse grid, informational)";
      return;
    }
    r.measured = dev[2];
    const bool shrinking = dev[0] > dev[1] && dev[1] > dev[2];
    if (!(dev[2] <= 0.02 && shrinking)) r.status = Status::fail;
  });

  s.check("nystrom-coulomb-direct-no-level", [&](CheckResult& r) {
    // The direct kernel alone (without the full-line singularity term) admits
    // no discrete level: its lowest real eigenvalue part hugs the continuum
    // edge and rises toward it under refinement.
    const auto params = ModelParams::natural(20.0);
    const coulomb::Coupling cou{1.0, 1};
    const auto kernel = oracle::PotentialKernel::coulomb(params, cou);
    const int base = (3 * s.opt().grid_size) / 2;
    double e[2] = {0.0, 0.0};
    const int sizes[2] = {std::max(48, base / 2), std::max(48, base)};
    for (int i = 0; i < 2; ++i)
      e[i] = oracle::nystrom_solve(
                 kernel, params, oracle::momentum_grid(params, 1.0, sizes[i]))
                 .ground_energy;
    const double quadratic = *coulomb::spectral_roots(params, cou).e_minus;
    // Discretization scatters the continuum edge, so the minimum real part
    // is noisy near zero; the assertion is that nothing sits within reach
    // of the claimed discrete level an order of magnitude deeper.
    const double depth = std::max(0.0, -std::min(e[0], e[1]));
    r.detail = "min real part " + fmt(e[0]) + " and " + fmt(e[1]) +
               " across refinement hugs the continuum edge; "
               "quadratic-formula branch " +
               fmt(quadratic, "%.9g") + " is absent from the spectrum";
    if (coarse) {
      r.status = Status::warn;
      r.measured = depth;
      r.detail += " (coarse grid, informational)";
      return;
    }
    r.measured = depth;
    if (!(depth <= 0.05)) r.status = Status::fail;
  });

  s.check("assemble-parallel-serial-identical", [](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const coulomb::Coupling cou{1.0, 1};
    const auto kernel = oracle::PotentialKernel::coulomb(params, cou);
    const auto grid = oracle::momentum_grid(params, 1.0, 200);
    const auto a = oracle::assemble(kernel, params, grid);
    const auto b = oracle::assemble_serial(kernel, params, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
      worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    Suite::gate(r, worst, 0.0);
  });

  s.check("eigen-small-exact", [](CheckResult& r) {
    oracle::CMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    auto eig = oracle::eigen_dense(d);
    std::vector<double> re;
    for (auto z : eig) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    double worst = std::abs(re[0] - 1.0);
    worst = std::max(worst, std::abs(re[1] - 2.0));
    worst = std::max(worst, std::abs(re[2] - 3.0));
    oracle::CMatrix f(2);
    f(0, 1) = 1.0;
    f(1, 0) = 1.0;
    auto eig2 = oracle::eigen_dense(f);
    worst = std::max(worst, std::abs(std::abs(eig2[0]) - 1.0));
    worst = std::max(worst, std::abs(std::abs(eig2[1]) - 1.0));
    Suite::gate(r, worst, 1e-12);
  });
}

void add_ode_checks(Suite& s) {
  s.check("ode-exponential", [](CheckResult& r) {
    const auto curve = oracle::integrate_ode(
        [](double, Complex y) { return -y; }, 0.0, 1.0, Complex(1.0), 1e-12,
        11);
    Suite::gate(r, std::abs(curve.back().psi - std::exp(-1.0)), 1e-10);
  });

  s.check("ode-lorentzian", [](CheckResult& r) {
    const auto curve = oracle::integrate_ode(
        [](double p, Complex y) { return -2.0 * p / (p * p + 1.0) * y; }, 0.0,
        3.0, Complex(1.0), 1e-12, 61);
    double worst = 0.0;
    for (const auto& sample : curve)
      worst = std::max(worst, std::abs(sample.psi -
                                       1.0 / (sample.p * sample.p + 1.0)));
    Suite::gate(r, worst, 1e-8);
  });

  s.check("coulomb-ode-scaling", [&s](CheckResult& r) {
    (void)s;
    const double d10 = ode_closed_deviation(10.0);
    const double d20 = ode_closed_deviation(20.0);
    const double d40 = ode_closed_deviation(40.0);
    const double r1 = d10 / d20;
    const double r2 = d20 / d40;
    r.measured = r2;
    r.detail = "sup deviation " + fmt(d10) + " -> " + fmt(d20) + " -> " +
               fmt(d40) + "; contraction " + fmt(r1) + ", " + fmt(r2) +
               " (fourth-order remainder, nominal 16)";
    if (!(r1 >= 8.0 && r1 <= 32.0 && r2 >= 8.0 && r2 <= 32.0))
      r.status = Status::fail;
  });
}

void add_coulomb_checks(Suite& s) {
  const coulomb::Coupling cou{1.0, 1};

  s.check("coulomb-roots-identity", [&s](CheckResult& r) {
    Rng rng(s.opt().seed ^ 0xc0417ULL);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double z = rng.uniform(0.5, 2.0);
      const int n = 1 + static_cast<int>(rng.uniform(0.0, 3.0));
      const coulomb::Coupling c{z, n};
      const double b = double(n) / z; // hbar n / (m z_e2), natural units
      const double mu = rng.uniform(2.2 / b, 50.0 / b);
      const auto params = ModelParams::natural(mu);
      const auto spec = coulomb::spectral_roots(params, c);
      const double disc = spec.discriminant;
      const double big = b * mu; // hbar n mu / (m z_e2)
      for (const double sign : {-1.0, 1.0}) {
        const double factor = 1.0 + sign * std::sqrt(disc);
        const double closed_form =
            -(mu * mu / 8.0) * big * big * factor * factor;
        const double exact = sign < 0 ? *spec.e_minus : *spec.e_plus;
        worst =
            std::max(worst, std::abs(closed_form - exact) / std::abs(exact));
      }
    }
    Suite::gate(r, worst, 1e-12);
  });

  s.check("coulomb-spectrum-example", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const auto spec = coulomb::spectral_roots(params, cou);
    double worst = std::abs(spec.discriminant - 0.96);
    worst = std::max(worst, std::abs(*spec.p0_minus -
                                     50.0 * (1.0 - std::sqrt(0.96))));
    worst = std::max(worst,
                     std::abs(*spec.p0_minus * *spec.p0_plus - 100.0) / 100.0);
    Suite::gate(r, worst, 1e-12);
  });

  s.check("coulomb-expansion-limit", [&](CheckResult& r) {
    const auto params = ModelParams::natural(1e4);
    const auto spec = coulomb::spectral_roots(params, cou);
    const auto exp_report = coulomb::energy_expansions(params, cou);
    double worst = std::abs(*spec.e_minus + 0.5);
    worst = std::max(worst, std::abs(exp_report.e_minus_expansion + 0.5));
    worst = std::max(worst,
                     std::abs(exp_report.e_minus_expansion_derived + 0.5));
    Suite::gate(r, worst, 1e-7);
  });

  s.check("coulomb-expansion-sign", [&](CheckResult& r) {
    r.status = Status::info;
    const auto params = ModelParams::natural(10.0);
    const auto spec = coulomb::spectral_roots(params, cou);
    const auto exp_report = coulomb::energy_expansions(params, cou);
    const double exact = *spec.e_minus;
    r.measured = exp_report.e_minus_expansion - exact;
    r.detail = "exact lower-branch energy " + fmt(exact, "%.12g") +
               "; expansion with -2eps^2 correction gives " +
               fmt(exp_report.e_minus_expansion, "%.12g") + " (off by " +
               fmt(exp_report.e_minus_expansion - exact) +
               "), with +2eps^2 gives " +
               fmt(exp_report.e_minus_expansion_derived, "%.12g") +
               " (off by " +
               fmt(exp_report.e_minus_expansion_derived - exact) +
               "); the exact root sides with the + sign";
  });

  s.check("coulomb-normalization", [&s](CheckResult& r) {
    Rng rng(s.opt().seed ^ 0xc3917ULL);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double z = rng.uniform(0.5, 2.0);
      const int n = 1 + static_cast<int>(rng.uniform(0.0, 2.0));
      const coulomb::Coupling c{z, n};
      const double b = double(n) / z;
      const double mu = rng.uniform(2.2 / b, 40.0 / b);
      const auto params = ModelParams::natural(mu);
      const auto spec = coulomb::spectral_roots(params, c);
      const double p0 = *spec.p0_minus;
      const double norm = quad::integrate(
          [&](double p) {
            return std::norm(coulomb::psi_closed_form(p, p0, params, c));
          },
          quad::IntervalMap::full_line(std::min(mu, p0)),
          quad::Tolerance{1e-13, 1e-12, 300});
      worst = std::max(worst, std::abs(norm - 1.0));
    }
    Suite::gate(r, worst, 1e-8);
  });

  s.check("coulomb-phase-winding", [](CheckResult& r) {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const coulomb::Coupling c{1.0, n};
      const auto params = ModelParams::natural(1e3);
      const auto spec = coulomb::spectral_roots(params, c);
      worst = std::max(worst, std::abs(coulomb::phase_winding(
                                  *spec.p0_minus, params, c) -
                              n));
    }
    Suite::gate(r, worst, 1e-12);
  });

  s.check("coulomb-singularity-bounded", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    const auto spec = coulomb::spectral_roots(params, cou);
    const auto term = coulomb::singularity_term(*spec.p0_minus, params, cou);
    const double mag = std::abs(term.value);
    r.detail = "|S| = " + fmt(mag) + ", stripped |S| = " +
               fmt(std::abs(term.stripped)) + ", limit-form phase rate " +
               fmt(term.phase_rate);
    r.measured = mag;
    if (!std::isfinite(mag) || mag > 10.0) r.status = Status::fail;
  });

  s.check("coulomb-min-length-natural", [&](CheckResult& r) {
    const auto params = ModelParams::natural(10.0);
    double worst = std::abs(coulomb::min_length_bound(1, params, cou) -
                            1.0 / std::sqrt(2.0));
    worst = std::max(worst, std::abs(coulomb::min_length_bound(2, params, cou) /
                                     coulomb::min_length_bound(1, params, cou) -
                                 2.0));
    Suite::gate(r, worst, 1e-15);
  });

  s.check("coulomb-min-length-si", [](CheckResult& r) {
    const auto params = ModelParams::si(kSiHbar / 3.742e-11);
    const double ze2 = kFineStructure * kSiHbar * kSpeedOfLight;
    const coulomb::Coupling hydrogen{ze2, 1};
    const double bound = coulomb::min_length_bound(1, params, hydrogen);
    r.detail = "bound " + fmt(bound, "%.12g") + " m vs 3.742e-11 m";
    Suite::gate(r, std::abs(bound / 3.742e-11 - 1.0), 1e-3);
  });

  s.check("coulomb-veff-origin-odd", [&](CheckResult& r) {
    const auto params = ModelParams::natural(2.0);
    double worst = std::abs(coulomb::v_eff(0.0, params, cou));
    for (const double x : {0.3, 1.7, 6.0})
      worst = std::max(worst, std::abs(coulomb::v_eff(-x, params, cou) +
                                       coulomb::v_eff(x, params, cou)));
    Suite::gate(r, worst, 1e-300);
  });

  s.check("coulomb-veff-longrange", [&](CheckResult& r) {
    // x V_eff -> -z_e2 with an O(1/z^2) deficit: check the rate, report the
    // measured size at z = 5 (2.13%, above a naive 2% reading).
    const auto params = ModelParams::natural(2.0);
    const auto dev = [&](double z) {
      const double x = 2.0 * params.hbar * z / params.mu;
      return std::abs(x * coulomb::v_eff(x, params, cou) / (-cou.z_e2) - 1.0);
    };
    const double d5 = dev(5.0);
    const double d10 = dev(10.0);
    const double ratio = d5 / d10;
    r.measured = d5;
    r.detail = "deficit " + fmt(d5) + " at z=5, " + fmt(d10) +
               " at z=10; ratio " + fmt(ratio) +
               " consistent with 1/(2z^2) tail";
    if (!(ratio >= 3.5 && ratio <= 5.0 && d5 < 0.05)) r.status = Status::fail;
  });

  s.check("coulomb-veff-envelope", [&](CheckResult& r) {
    r.status = Status::info;
    const auto params = ModelParams::natural(2.0);
    double best = 0.0;
    double where = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double z = 0.05 * std::pow(20.0 / 0.05, i / 400.0);
      const double x = 2.0 * params.hbar * z / params.mu;
      const double v = std::abs(x * coulomb::v_eff(x, params, cou) /
                                cou.z_e2);
      if (v > best) {
        best = v;
        where = z;
      }
    }
    r.measured = best;
    r.detail = "max |x V_eff|/z_e2 = " + fmt(best) + " at z = " + fmt(where) +
               "; the regularized well overshoots the bare-potential "
               "envelope near its turning region";
  });
}

} // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
    case Status::warn: return "warn";
  }
  return "unknown";
}

Report run_all(const Options& options) {
  Suite suite(options);
  add_special_function_checks(suite);
  add_kinematics_checks(suite);
  add_delta_checks(suite);
  add_nystrom_checks(suite);
  add_ode_checks(suite);
  add_coulomb_checks(suite);
  return suite.take();
}

} // namespace mlqm::verify
