#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mlqm/errors.hpp"

namespace mlqm::quad {

/// Shared accuracy budget for the iterative numerics.
struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iter = 200;

    Tolerance() = default;
    Tolerance(double abs, double rel, int iters);
};

/// Integration domain plus the change of variables used to reach a finite
/// interval.  Infinite domains use rational maps with an adjustable scale s:
///   full line:      p = s t / (1 - t^2),        t in (-1, 1)
///   half line:      x = a + s (1 + t) / (1 - t), t in (-1, 1)
/// The scale should match the width of the integrand's support; nodes stay
/// strictly increasing under both maps.
struct IntervalMap {
    enum class Kind { finite, semi_infinite, full_line };

    Kind kind = Kind::finite;
    double a = 0.0; // finite: lower edge; semi_infinite: left endpoint
    double b = 0.0; // finite: upper edge
    double scale = 1.0;

    static IntervalMap finite(double a, double b);
    static IntervalMap semi_infinite(double a, double scale = 1.0);
    static IntervalMap full_line(double scale = 1.0);
};

/// Gauss-Legendre nodes and weights on (-1, 1), generated by Newton iteration
/// on the Legendre recurrence.
void gauss_legendre_base(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Fixed quadrature rule: mapped nodes, weights including the map jacobian.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    IntervalMap map;

    /// n-point Gauss-Legendre rule transplanted through the given map.
    static QuadratureRule gauss_legendre(int n, const IntervalMap& map);

    /// Composite Gauss-Legendre rule over consecutive finite panels.
    /// edges must be strictly increasing with at least two entries.
    static QuadratureRule composite_gauss(const std::vector<double>& edges, int per_panel);

    template <class F>
    auto apply(F&& f) const -> decltype(f(0.0)) {
        decltype(f(0.0)) acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }

    std::size_t size() const { return nodes.size(); }
};

/// Globally adaptive integration: paired Gauss-Legendre estimates per segment,
/// worst segment bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |result|).  Throws NoConvergence when max_iter
/// bisections are not enough.
double integrate(const std::function<double(double)>& f, const IntervalMap& map,
                 const Tolerance& tol = Tolerance());

/// Same strategy for complex integrands (error measured in modulus).
/// Separate name, not an overload: real-valued lambdas convert to either
/// std::function signature, which would make every call ambiguous.
std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f,
    const IntervalMap& map, const Tolerance& tol = Tolerance());

} // namespace mlqm::quad
