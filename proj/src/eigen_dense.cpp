#include "mlqm/eigen_dense.hpp"

#include "mlqm/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace mlqm::oracle {

namespace {

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Householder reduction to upper Hessenberg form, in place.
void hessenberg(CMatrix& a) {
  const int n = a.size();
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase =
        (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
    std::vector<Complex> v(n - k - 1);
    for (int i = k + 1; i < n; ++i) v[i - k - 1] = a(i, k);
    v[0] += phase * xnorm; // same-sign shift: no cancellation
    double vnorm2 = 0.0;
    for (const auto& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // Left: A <- (I - beta v v^H) A on rows k+1.., columns k..
    for (int j = k; j < n; ++j) {
      Complex s{0.0, 0.0};
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * a(i, j);
      s *= beta;
      for (int i = k + 1; i < n; ++i) a(i, j) -= v[i - k - 1] * s;
    }
    // Right: A <- A (I - beta v v^H) on columns k+1..
    for (int i = 0; i < n; ++i) {
      Complex s{0.0, 0.0};
      for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j - k - 1];
      s *= beta;
      for (int j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j - k - 1]);
    }
    for (int i = k + 2; i < n; ++i) a(i, k) = Complex(0.0);
  }
}

struct Givens {
  double c = 1.0;
  Complex s{0.0, 0.0};
};

// Unitary [[c, s], [-conj(s), c]] with real c mapping (f, g) -> (r, 0).
Givens make_givens(Complex f, Complex g) {
  if (g == Complex(0.0)) return {1.0, Complex(0.0)};
  if (f == Complex(0.0)) return {0.0, Complex(1.0)};
  const double d = std::sqrt(std::norm(f) + std::norm(g));
  const double af = std::abs(f);
  return {af / d, (f / af) * std::conj(g) / d};
}

// Eigenvalue of [[a, b], [c, d]] closer to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex mid = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex l1 = mid + disc;
  const Complex l2 = mid - disc;
  return (abs1(l1 - d) < abs1(l2 - d)) ? l1 : l2;
}

struct LuFactors {
  CMatrix f;
  std::vector<int> piv;
};

LuFactors lu_factor(CMatrix a) {
  const int n = a.size();
  LuFactors lu{std::move(a), std::vector<int>(n)};
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = abs1(lu.f(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double cand = abs1(lu.f(i, k));
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best == 0.0) throw EigenFailure("lu_factor: singular pivot");
    lu.piv[k] = pivot;
    if (pivot != k)
      for (int j = 0; j < n; ++j) std::swap(lu.f(k, j), lu.f(pivot, j));
    const Complex inv = 1.0 / lu.f(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Complex m = lu.f(i, k) * inv;
      lu.f(i, k) = m;
      for (int j = k + 1; j < n; ++j) lu.f(i, j) -= m * lu.f(k, j);
    }
  }
  return lu;
}

std::vector<Complex> lu_apply(const LuFactors& lu, std::vector<Complex> b) {
  const int n = lu.f.size();
  // The factorization swaps whole rows, multiplier columns included, so the
  // stored L is expressed in the fully pivoted row order.  All interchanges
  // must therefore hit b before the triangular solves; interleaving them
  // with forward substitution would pair multipliers with stale entries.
  for (int k = 0; k < n; ++k)
    if (lu.piv[k] != k) std::swap(b[k], b[lu.piv[k]]);
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) b[i] -= lu.f(i, k) * b[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= lu.f(i, j) * b[j];
    b[i] /= lu.f(i, i);
  }
  return b;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

} // namespace

std::vector<Complex> eigen_dense(CMatrix a) {
  const int n = a.size();
  if (n > kMaxEigenSize)
    throw DomainError("eigen_dense: matrix larger than supported cap");
  if (n == 0) return {};
  for (const auto& z : a.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("eigen_dense: non-finite entry");

  hessenberg(a);
  std::vector<Complex> eig(n);
  int hi = n - 1;
  int iter_since_deflation = 0;
  int total_iter = 0;
  const int max_total = 60 * n + 100;

  while (hi >= 0) {
    // Deflation scan: largest lo with a negligible subdiagonal below it.
    int lo = hi;
    while (lo > 0) {
      const double small = DBL_EPSILON * (abs1(a(lo - 1, lo - 1)) + abs1(a(lo, lo)));
      if (abs1(a(lo, lo - 1)) <= small) {
        a(lo, lo - 1) = Complex(0.0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = a(hi, hi);
      --hi;
      iter_since_deflation = 0;
      continue;
    }
    if (++total_iter > max_total)
      throw NoConvergence("eigen_dense: QR iteration did not converge");
    ++iter_since_deflation;

    Complex sigma;
    if (iter_since_deflation % 20 == 0) {
      // Exceptional shift to break limit cycles.
      sigma = a(hi, hi) + 0.75 * abs1(a(hi, hi - 1));
    } else {
      sigma = wilkinson_shift(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1),
                              a(hi, hi));
    }

    // Explicit single-shift QR sweep confined to the active block.
    for (int i = lo; i <= hi; ++i) a(i, i) -= sigma;
    std::vector<Givens> rots(hi - lo);
    for (int i = lo; i < hi; ++i) {
      const Givens g = make_givens(a(i, i), a(i + 1, i));
      rots[i - lo] = g;
      for (int j = i; j <= hi; ++j) {
        const Complex t1 = a(i, j);
        const Complex t2 = a(i + 1, j);
        a(i, j) = g.c * t1 + g.s * t2;
        a(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
    }
    for (int i = lo; i < hi; ++i) {
      const Givens g = rots[i - lo];
      for (int r = lo; r <= i + 1; ++r) {
        const Complex t1 = a(r, i);
        const Complex t2 = a(r, i + 1);
        a(r, i) = g.c * t1 + std::conj(g.s) * t2;
        a(r, i + 1) = -g.s * t1 + g.c * t2;
      }
    }
    for (int i = lo; i <= hi; ++i) a(i, i) += sigma;
  }
  return eig;
}

std::vector<Complex> solve_lu(CMatrix a, std::vector<Complex> b) {
  if (a.size() != static_cast<int>(b.size()))
    throw DomainError("solve_lu: dimension mismatch");
  return lu_apply(lu_factor(std::move(a)), std::move(b));
}

namespace {

// One pass of shifted inverse iteration; returns the normalized iterate.
std::vector<Complex> inverse_iterate(const CMatrix& a, Complex shift,
                                     std::vector<Complex> v, int steps) {
  const int n = a.size();
  CMatrix m = a;
  for (int i = 0; i < n; ++i) m(i, i) -= shift;
  const LuFactors lu = lu_factor(std::move(m));
  for (int it = 0; it < steps; ++it) {
    v = lu_apply(lu, std::move(v));
    const double nv = norm2(v);
    if (nv == 0.0) throw EigenFailure("eigenvector_for: zero iterate");
    for (auto& z : v) z /= nv;
  }
  return v;
}

} // namespace

Complex rayleigh_quotient(const CMatrix& a, const std::vector<Complex>& v) {
  const int n = a.size();
  if (n != static_cast<int>(v.size()))
    throw DomainError("rayleigh_quotient: dimension mismatch");
  Complex num{0.0, 0.0};
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex av{0.0, 0.0};
    for (int j = 0; j < n; ++j) av += a(i, j) * v[j];
    num += std::conj(v[i]) * av;
    den += std::norm(v[i]);
  }
  if (den == 0.0) throw EigenFailure("rayleigh_quotient: zero vector");
  return num / den;
}

std::vector<Complex> eigenvector_for(const CMatrix& a, Complex lambda) {
  const int n = a.size();
  if (n == 0) return {};
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, abs1(a(i, i)));
  Complex shift = lambda;
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<Complex> v(n, Complex(1.0 / std::sqrt(double(n))));
      v = inverse_iterate(a, shift, std::move(v), 4);
      // The QR eigenvalue carries O(eps*||A||) error, which caps the residual
      // of plain inverse iteration. Re-solving at the Rayleigh quotient of the
      // current iterate sharpens the shift to the vector's own accuracy.
      double best = residual_norm(a, lambda, v);
      std::vector<Complex> best_v = v;
      for (int refine = 0; refine < 2; ++refine) {
        Complex rho;
        try {
          rho = rayleigh_quotient(a, best_v);
          v = inverse_iterate(a, rho, best_v, 2);
        } catch (const EigenFailure&) {
          break; // exactly singular refined shift: current vector is converged
        }
        const double res = residual_norm(a, rho, v);
        if (res >= best) break;
        best = res;
        best_v = std::move(v);
      }
      return best_v;
    } catch (const EigenFailure&) {
      if (attempt >= 3) throw;
      // Exactly singular shift: nudge off the eigenvalue and retry.
      shift += Complex(1e-12, 1e-12) * (1.0 + scale);
    }
  }
}

double residual_norm(const CMatrix& a, Complex lambda,
                     const std::vector<Complex>& v) {
  const int n = a.size();
  if (n != static_cast<int>(v.size()))
    throw DomainError("residual_norm: dimension mismatch");
  std::vector<Complex> r(n);
  for (int i = 0; i < n; ++i) {
    Complex s{0.0, 0.0};
    for (int j = 0; j < n; ++j) s += a(i, j) * v[j];
    r[i] = s - lambda * v[i];
  }
  const double nv = norm2(v);
  if (nv == 0.0) throw DomainError("residual_norm: zero vector");
  return norm2(r) / nv;
}

} // namespace mlqm::oracle
