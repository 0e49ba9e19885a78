#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "mlqm/eigen_dense.hpp"
#include "mlqm/errors.hpp"
#include "test_util.hpp"

using namespace mlqm;
using oracle::CMatrix;
using oracle::Complex;

namespace {

// Random orthogonal matrix via twice-iterated Gram-Schmidt; the second pass
// keeps the columns orthonormal to machine precision.
std::vector<std::vector<double>> random_orthogonal(int n, testutil::Rng& rng) {
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (auto& col : q)
    for (auto& v : col) v = rng.uniform(-1.0, 1.0);
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < j; ++k) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += q[j][i] * q[k][i];
        for (int i = 0; i < n; ++i) q[j][i] -= dot * q[k][i];
      }
      double nrm = 0.0;
      for (int i = 0; i < n; ++i) nrm += q[j][i] * q[j][i];
      nrm = std::sqrt(nrm);
      for (int i = 0; i < n; ++i) q[j][i] /= nrm;
    }
  }
  return q;
}

std::vector<double> sorted_real_parts(const std::vector<Complex>& eig) {
  std::vector<double> re;
  re.reserve(eig.size());
  for (auto z : eig) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  return re;
}

}  // namespace

TEST_CASE("eigenvalues of a diagonal matrix are its entries") {
  CMatrix d(3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const auto re = sorted_real_parts(oracle::eigen_dense(d));
  CHECK(std::abs(re[0] + 1.0) < 1e-13);
  CHECK(std::abs(re[1] - 2.0) < 1e-13);
  CHECK(std::abs(re[2] - 3.0) < 1e-13);
}

TEST_CASE("symmetric 2x2 with known spectrum") {
  CMatrix a(2);
  a(0, 0) = a(1, 1) = 2.0;
  a(0, 1) = a(1, 0) = 1.0;
  const auto re = sorted_real_parts(oracle::eigen_dense(a));
  CHECK(std::abs(re[0] - 1.0) < 1e-13);
  CHECK(std::abs(re[1] - 3.0) < 1e-13);
}

TEST_CASE("rotation matrix yields the conjugate imaginary pair") {
  CMatrix a(2);
  a(0, 1) = -1.0;
  a(1, 0) = 1.0;
  auto eig = oracle::eigen_dense(a);
  std::sort(eig.begin(), eig.end(),
            [](Complex x, Complex y) { return x.imag() < y.imag(); });
  CHECK(std::abs(eig[0] - Complex(0.0, -1.0)) < 1e-13);
  CHECK(std::abs(eig[1] - Complex(0.0, 1.0)) < 1e-13);
}

TEST_CASE("similarity-constructed 50x50 spectrum is recovered") {
  // A = Q diag(lambda) Q^T with Q random orthogonal: the eigenvalues are
  // planted, so this checks the QR iteration against an exact answer.
  const int n = 50;
  testutil::Rng rng(404);
  std::vector<double> lambda(n);
  for (auto& v : lambda) v = rng.uniform(-5.0, 5.0);
  const auto q = random_orthogonal(n, rng);
  CMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += q[k][i] * lambda[k] * q[k][j];
      a(i, j) = acc;
    }
  const auto re = sorted_real_parts(oracle::eigen_dense(a));
  std::sort(lambda.begin(), lambda.end());
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(re[i] - lambda[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("eigen_dense rejects oversized and non-finite input") {
  CHECK_THROWS_AS((void)oracle::eigen_dense(CMatrix(2001)), DomainError);
  CMatrix bad(2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS((void)oracle::eigen_dense(bad), DomainError);
}

TEST_CASE("solve_lu handles a fully pivoted system exactly") {
  // Every elimination step of this matrix swaps rows; a solver that applies
  // interchanges in the wrong order returns garbage here.
  CMatrix a(3);
  a(0, 0) = 1.0; a(0, 1) = 2.0; a(0, 2) = 3.0;
  a(1, 0) = 4.0; a(1, 1) = 5.0; a(1, 2) = 6.0;
  a(2, 0) = 7.0; a(2, 1) = 8.0; a(2, 2) = 10.0;
  const std::vector<Complex> b = {6.0, 15.0, 25.0};
  const auto x = oracle::solve_lu(a, b);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - 1.0) < 1e-13);
}

TEST_CASE("solve_lu backward error stays at machine precision") {
  testutil::Rng rng(909);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = 40;
    CMatrix a(n);
    std::vector<Complex> xtrue(n);
    for (int i = 0; i < n; ++i) {
      xtrue[i] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      for (int j = 0; j < n; ++j)
        a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    std::vector<Complex> b(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i] += a(i, j) * xtrue[j];
    const auto x = oracle::solve_lu(a, b);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex r = -b[i];
      for (int j = 0; j < n; ++j) r += a(i, j) * x[j];
      num += std::norm(r);
      den += std::norm(b[i]);
    }
    CHECK(std::sqrt(num / den) < 1e-12);
  }
}

TEST_CASE("solve_lu rejects singular systems") {
  CMatrix a(2);
  a(0, 0) = a(0, 1) = a(1, 0) = a(1, 1) = 1.0;
  CHECK_THROWS_AS((void)oracle::solve_lu(a, {1.0, 2.0}), EigenFailure);
}

TEST_CASE("eigenvector refinement reaches the vector's own accuracy") {
  CMatrix a(4);
  a(0, 0) = 4.0; a(1, 1) = 1.0; a(2, 2) = -2.0; a(3, 3) = 0.5;
  a(0, 1) = a(1, 0) = 0.3;
  a(2, 3) = a(3, 2) = -0.1;
  const auto eig = oracle::eigen_dense(a);
  Complex ground = eig[0];
  for (auto z : eig)
    if (z.real() < ground.real()) ground = z;
  const auto v = oracle::eigenvector_for(a, ground);
  const Complex rho = oracle::rayleigh_quotient(a, v);
  CHECK(oracle::residual_norm(a, rho, v) < 1e-13);
}

TEST_CASE("rayleigh quotient of a planted eigenvector is its eigenvalue") {
  CMatrix a(2);
  a(0, 0) = 2.0; a(0, 1) = 1.0;
  a(1, 0) = 1.0; a(1, 1) = 2.0;
  const std::vector<Complex> v = {1.0, 1.0};
  CHECK(std::abs(oracle::rayleigh_quotient(a, v) - 3.0) < 1e-14);
  CHECK_THROWS_AS((void)oracle::rayleigh_quotient(a, {0.0, 0.0}),
                  EigenFailure);
}
