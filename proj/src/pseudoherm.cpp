#include "pherm/pseudoherm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pherm {

double pseudo_residual(const ComplexMatrix& h, const ComplexMatrix& eta) {
  if (h.rows() != eta.rows() || h.cols() != eta.cols())
    throw std::invalid_argument("pseudo_residual: dimension mismatch");
  if (hermiticity_residual(eta) > 1e-12)
    throw std::invalid_argument("pseudo_residual: eta is not Hermitian");
  Eigen::FullPivLU<ComplexMatrix> lu(eta);
  if (!lu.isInvertible())
    throw std::invalid_argument("pseudo_residual: eta is singular");

  double scale = eta.norm() * h.norm();
  if (scale == 0.0) return 0.0;  // H = 0 is trivially pseudo-Hermitian
  return (h.adjoint() * eta - eta * h).norm() / scale;
}

SpectrumClass classify_spectrum(const ComplexMatrix& h, double tol) {
  ComplexVector w = eigenvalues_only(h);
  const int n = static_cast<int>(w.size());

  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(w(k)));
  const double imag_tol = tol * std::max(1.0, radius);

  std::vector<int> nonreal;
  for (int k = 0; k < n; ++k)
    if (std::abs(w(k).imag()) >= imag_tol) nonreal.push_back(k);

  SpectrumClass cls;
  if (nonreal.empty()) {
    cls.kind = SpectrumKind::AllReal;
    return cls;
  }

  cls.kind = SpectrumKind::ConjugatePairs;
  const double pair_tol = tol * std::max(1.0, radius);
  std::vector<bool> used(nonreal.size(), false);
  for (size_t i = 0; i < nonreal.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Complex target = std::conj(w(nonreal[i]));
    double best = std::numeric_limits<double>::infinity();
    size_t best_j = nonreal.size();
    for (size_t j = i + 1; j < nonreal.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(w(nonreal[j]) - target);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == nonreal.size() || best > pair_tol)
      throw std::runtime_error(
          "classify_spectrum: non-real eigenvalue has no conjugate partner "
          "within tolerance");
    used[best_j] = true;
    cls.pairs.emplace_back(nonreal[i], nonreal[best_j]);
  }
  return cls;
}

MetricPair build_metric(const ComplexMatrix& h, double spectrum_tol,
                        double intertwine_tol) {
  SpectrumClass cls = classify_spectrum(h, spectrum_tol);
  if (cls.kind != SpectrumKind::AllReal)
    throw std::runtime_error(
        "build_metric: complex spectrum, no positive-definite metric exists");

  EigenSystem sys = eig(h);
  ComplexMatrix theta = sys.left * sys.left.adjoint();
  theta = 0.5 * (theta + theta.adjoint()).eval();  // strip rounding asymmetry

  MetricPair pair;
  pair.theta = theta;
  pair.factor = cholesky_factor(theta);

  double residual = (h.adjoint() * theta - theta * h).norm() /
                    std::max(theta.norm() * h.norm(), 1e-300);
  if (residual > intertwine_tol)
    throw std::runtime_error("build_metric: intertwining residual " +
                             std::to_string(residual) + " exceeds tolerance");
  return pair;
}

ComplexMatrix to_hermitian_picture(const ComplexMatrix& h, const MetricPair& pair,
                                   double hermitian_tol) {
  ComplexMatrix result = pair.factor * h * inverse(pair.factor);
  if (hermiticity_residual(result) > hermitian_tol)
    throw std::runtime_error(
        "to_hermitian_picture: result is not Hermitian (metric pair does not "
        "match the Hamiltonian)");
  return result;
}

ComplexMatrix transform_observable(const ComplexMatrix& a, const MetricPair& pair) {
  return inverse(pair.factor) * a * pair.factor;
}

}  // namespace pherm
