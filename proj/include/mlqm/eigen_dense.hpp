#pragma once

#include <complex>
#include <vector>

namespace mlqm::oracle {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Complex& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

/// Largest matrix eigen_dense accepts.
inline constexpr int kMaxEigenSize = 2000;

/// All eigenvalues of a general complex matrix: Householder reduction to
/// Hessenberg form, then shifted QR with deflation.  Unordered.
/// Throws DomainError above kMaxEigenSize, NoConvergence if QR stalls.
std::vector<Complex> eigen_dense(CMatrix a);

/// Solve a x = b by LU with partial pivoting (a is consumed).
/// Throws EigenFailure on an exactly singular pivot.
std::vector<Complex> solve_lu(CMatrix a, std::vector<Complex> b);

/// Eigenvector for an approximate eigenvalue, by inverse iteration on the
/// original matrix with Rayleigh-quotient shift refinement.  Returns a
/// unit-norm vector.
std::vector<Complex> eigenvector_for(const CMatrix& a, Complex lambda);

/// v^H a v / v^H v: the eigenvalue estimate a given vector supports.
Complex rayleigh_quotient(const CMatrix& a, const std::vector<Complex>& v);

/// ||a v - lambda v||_2 / ||v||_2.
double residual_norm(const CMatrix& a, Complex lambda,
                     const std::vector<Complex>& v);

} // namespace mlqm::oracle
