#include "mlqm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace mlqm::quad {

Tolerance::Tolerance(double abs, double rel, int iters) : abs_tol(abs), rel_tol(rel), max_iter(iters) {
    if (!(abs_tol > 0.0 && abs_tol < 1.0) || !(rel_tol > 0.0 && rel_tol < 1.0))
        throw DomainError("Tolerance: abs_tol and rel_tol must lie in (0, 1)");
    if (max_iter < 1) throw DomainError("Tolerance: max_iter must be >= 1");
}

IntervalMap IntervalMap::finite(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("IntervalMap::finite requires finite a < b");
    IntervalMap m;
    m.kind = Kind::finite;
    m.a = a;
    m.b = b;
    return m;
}

IntervalMap IntervalMap::semi_infinite(double a, double scale) {
    if (!std::isfinite(a) || !(scale > 0.0) || !std::isfinite(scale))
        throw DomainError("IntervalMap::semi_infinite requires finite a and scale > 0");
    IntervalMap m;
    m.kind = Kind::semi_infinite;
    m.a = a;
    m.scale = scale;
    return m;
}

IntervalMap IntervalMap::full_line(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw DomainError("IntervalMap::full_line requires scale > 0");
    IntervalMap m;
    m.kind = Kind::full_line;
    m.scale = scale;
    return m;
}

void gauss_legendre_base(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw DomainError("gauss_legendre_base: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

namespace {

// Node transplant through the rational maps; returns (x, jacobian).
inline void map_point(const IntervalMap& m, double t, double& x, double& jac) {
    x = 0.0;
    jac = 0.0;
    switch (m.kind) {
        case IntervalMap::Kind::finite: {
            const double c = 0.5 * (m.a + m.b), h = 0.5 * (m.b - m.a);
            x = c + h * t;
            jac = h;
            break;
        }
        case IntervalMap::Kind::semi_infinite: {
            const double d = 1.0 - t;
            x = m.a + m.scale * (1.0 + t) / d;
            jac = 2.0 * m.scale / (d * d);
            break;
        }
        case IntervalMap::Kind::full_line: {
            const double d = 1.0 - t * t;
            x = m.scale * t / d;
            jac = m.scale * (1.0 + t * t) / (d * d);
            break;
        }
    }
}

template <class T>
struct Segment {
    double lo, hi;
    T value;
    double err;
};

template <class T>
double seg_norm(const T& v) {
    if constexpr (std::is_same_v<T, double>)
        return std::abs(v);
    else
        return std::abs(v);
}

// Paired 7/15-point Gauss estimates on the mapped segment [lo, hi] of the
// reference variable t.  The 15-point value is kept, the difference is the
// error estimate.
template <class T, class F>
Segment<T> evaluate_segment(const F& f, const IntervalMap& map, double lo, double hi,
                            const std::vector<double>& n7, const std::vector<double>& w7,
                            const std::vector<double>& n15, const std::vector<double>& w15) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    T i7{}, i15{};
    for (std::size_t k = 0; k < n7.size(); ++k) {
        double x, jac;
        map_point(map, c + h * n7[k], x, jac);
        i7 += w7[k] * (f(x) * jac);
    }
    for (std::size_t k = 0; k < n15.size(); ++k) {
        double x, jac;
        map_point(map, c + h * n15[k], x, jac);
        i15 += w15[k] * (f(x) * jac);
    }
    i7 *= h;
    i15 *= h;
    return Segment<T>{lo, hi, i15, seg_norm<T>(i15 - i7)};
}

template <class T, class F>
T integrate_impl(const F& f, const IntervalMap& map, const Tolerance& tol) {
    static thread_local std::vector<double> n7, w7, n15, w15;
    if (n7.empty()) {
        gauss_legendre_base(7, n7, w7);
        gauss_legendre_base(15, n15, w15);
    }

    double lo = -1.0, hi = 1.0;
    if (map.kind == IntervalMap::Kind::finite && !(map.a < map.b))
        throw DomainError("integrate: empty interval");

    // Seed with a handful of segments so narrow features are not missed by a
    // single coarse estimate.
    const int seed = 8;
    std::vector<Segment<T>> segs;
    segs.reserve(seed + tol.max_iter + 1);
    for (int i = 0; i < seed; ++i) {
        const double a = lo + (hi - lo) * i / seed;
        const double b = lo + (hi - lo) * (i + 1) / seed;
        segs.push_back(evaluate_segment<T>(f, map, a, b, n7, w7, n15, w15));
    }

    const double min_width = 16.0 * std::numeric_limits<double>::epsilon();
    for (int split = 0;; ++split) {
        T total{};
        double err_sum = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err_sum += segs[i].err;
            if (segs[i].err > worst_err) {
                worst_err = segs[i].err;
                worst = i;
            }
        }
        if (err_sum <= std::max(tol.abs_tol, tol.rel_tol * seg_norm<T>(total))) return total;
        if (split >= tol.max_iter)
            throw NoConvergence("integrate: error estimate " + std::to_string(err_sum) +
                                " above tolerance after " + std::to_string(tol.max_iter) +
                                " refinements");
        const Segment<T> s = segs[worst];
        if (s.hi - s.lo < min_width)
            throw NoConvergence("integrate: segment width underflow before tolerance was met");
        const double mid = 0.5 * (s.lo + s.hi);
        segs[worst] = evaluate_segment<T>(f, map, s.lo, mid, n7, w7, n15, w15);
        segs.push_back(evaluate_segment<T>(f, map, mid, s.hi, n7, w7, n15, w15));
    }
}

} // namespace

QuadratureRule QuadratureRule::gauss_legendre(int n, const IntervalMap& map) {
    std::vector<double> t, w;
    gauss_legendre_base(n, t, w);
    QuadratureRule rule;
    rule.map = map;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x, jac;
        map_point(map, t[i], x, jac);
        rule.nodes[i] = x;
        rule.weights[i] = w[i] * jac;
    }
    return rule;
}

QuadratureRule QuadratureRule::composite_gauss(const std::vector<double>& edges, int per_panel) {
    if (edges.size() < 2) throw DomainError("composite_gauss: need at least two edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i] < edges[i + 1]))
            throw DomainError("composite_gauss: edges must be strictly increasing");
    std::vector<double> t, w;
    gauss_legendre_base(per_panel, t, w);
    QuadratureRule rule;
    rule.map = IntervalMap::finite(edges.front(), edges.back());
    rule.nodes.reserve((edges.size() - 1) * per_panel);
    rule.weights.reserve((edges.size() - 1) * per_panel);
    for (std::size_t pnl = 0; pnl + 1 < edges.size(); ++pnl) {
        const double c = 0.5 * (edges[pnl] + edges[pnl + 1]);
        const double h = 0.5 * (edges[pnl + 1] - edges[pnl]);
        for (int i = 0; i < per_panel; ++i) {
            rule.nodes.push_back(c + h * t[i]);
            rule.weights.push_back(h * w[i]);
        }
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, const IntervalMap& map,
                 const Tolerance& tol) {
    return integrate_impl<double>(f, map, tol);
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f,
    const IntervalMap& map, const Tolerance& tol) {
    return integrate_impl<std::complex<double>>(f, map, tol);
}

} // namespace mlqm::quad
