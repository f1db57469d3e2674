#include "pherm/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pherm {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
}

void require_finite(const ComplexMatrix& a, const char* who) {
  if (!all_finite(a))
    throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double relative_error(const ComplexMatrix& a, const ComplexMatrix& b) {
  double ref = b.norm();
  return (a - b).norm() / std::max(ref, 1e-300);
}

double hermiticity_residual(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm() / std::max(a.norm(), 1e-300);
}

bool all_finite(const ComplexMatrix& a) {
  return a.allFinite();
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "matmul");
  require_square(b, "matmul");
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch");
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a, "expm");
  require_finite(a, "expm");
  ComplexMatrix e = a.exp();
  if (!all_finite(e))
    throw std::overflow_error("expm: result overflowed (norm too large)");
  return e;
}

EigenSystem eig(const ComplexMatrix& a, double reconstruction_tol) {
  require_square(a, "eig");
  require_finite(a, "eig");

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig: eigensolver did not converge");

  const Eigen::Index n = a.rows();
  ComplexVector w = solver.eigenvalues();
  ComplexMatrix r = solver.eigenvectors();

  // deterministic order: sort by (Re, Im)
  std::vector<Eigen::Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (w(i).real() != w(j).real()) return w(i).real() < w(j).real();
    return w(i).imag() < w(j).imag();
  });
  EigenSystem sys;
  sys.eigenvalues.resize(n);
  sys.right.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sys.eigenvalues(k) = w(perm[k]);
    sys.right.col(k) = r.col(perm[k]);
  }

  Eigen::FullPivLU<ComplexMatrix> lu(sys.right);
  if (!lu.isInvertible())
    throw std::runtime_error("eig: defective input (right-vector matrix is singular)");
  ComplexMatrix rinv = lu.inverse();

  double residual =
      (sys.right * sys.eigenvalues.asDiagonal() * rinv - a).norm() /
      std::max(a.norm(), 1e-300);
  if (residual > reconstruction_tol)
    throw std::runtime_error(
        "eig: reconstruction residual " + std::to_string(residual) +
        " exceeds tolerance (input numerically non-diagonalizable)");

  sys.left = rinv.adjoint();
  return sys;
}

ComplexVector eigenvalues_only(const ComplexMatrix& a) {
  require_square(a, "eigenvalues_only");
  require_finite(a, "eigenvalues_only");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues_only: eigensolver did not converge");
  ComplexVector w = solver.eigenvalues();
  std::sort(w.data(), w.data() + w.size(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return w;
}

ComplexMatrix cholesky_factor(const ComplexMatrix& theta, double hermitian_tol) {
  require_square(theta, "cholesky_factor");
  require_finite(theta, "cholesky_factor");
  if (hermiticity_residual(theta) > hermitian_tol)
    throw std::invalid_argument("cholesky_factor: input is not Hermitian");

  Eigen::LLT<ComplexMatrix> llt(theta);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error(
        "cholesky_factor: non-positive pivot (matrix is not positive definite)");
  ComplexMatrix lower = llt.matrixL();
  return lower.adjoint();
}

ComplexMatrix inverse(const ComplexMatrix& a, double condition_cap) {
  require_square(a, "inverse");
  require_finite(a, "inverse");
  Eigen::FullPivLU<ComplexMatrix> lu(a);
  if (!lu.isInvertible())
    throw std::runtime_error("inverse: matrix is singular");
  if (lu.rcond() < 1.0 / condition_cap)
    throw std::runtime_error("inverse: matrix is ill-conditioned (rcond below cap)");
  return lu.inverse();
}

}  // namespace pherm
