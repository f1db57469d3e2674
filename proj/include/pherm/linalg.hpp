#pragma once

#include <Eigen/Dense>
#include <complex>

namespace pherm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Eigenvalues together with biorthonormalized right/left eigenvector sets.
/// Columns of `right` are right eigenvectors, columns of `left` are the left
/// partners, scaled so that left.adjoint() * right == I. Eigenvalues are
/// sorted by (Re, Im) ascending and the vector sets follow that order.
struct EigenSystem {
  ComplexVector eigenvalues;
  ComplexMatrix right;
  ComplexMatrix left;
};

double frobenius_norm(const ComplexMatrix& a);

/// ||a - b|| / max(||b||, eps) in Frobenius norm.
double relative_error(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - a†|| / max(||a||, eps).
double hermiticity_residual(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

/// Matrix exponential (scaling-and-squaring with a Pade core).
/// Throws std::overflow_error if the result is not finite.
ComplexMatrix expm(const ComplexMatrix& a);

/// Dense general eigendecomposition. Left vectors come from the inverse of
/// the right-vector matrix, so biorthonormality holds by construction.
/// Throws std::runtime_error when the reconstruction residual
/// ||R diag(w) R^-1 - a|| / ||a|| exceeds `reconstruction_tol` (defective or
/// numerically non-diagonalizable input).
EigenSystem eig(const ComplexMatrix& a, double reconstruction_tol = 1e-9);

/// Eigenvalues only, sorted by (Re, Im); no diagonalizability check.
ComplexVector eigenvalues_only(const ComplexMatrix& a);

/// Factor a Hermitian positive-definite theta as theta = B† B where B is the
/// adjoint of the lower-triangular Cholesky factor. Throws on non-Hermitian
/// input (residual above `hermitian_tol`) or a non-positive pivot.
ComplexMatrix cholesky_factor(const ComplexMatrix& theta,
                              double hermitian_tol = 1e-10);

/// Inverse via full-pivot LU. Throws std::runtime_error for singular input or
/// an estimated condition number above `condition_cap`.
ComplexMatrix inverse(const ComplexMatrix& a, double condition_cap = 1e14);

}  // namespace pherm
