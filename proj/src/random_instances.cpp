#include "pherm/random_instances.hpp"

#include <stdexcept>

namespace pherm {

namespace {

ComplexMatrix random_gaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

}  // namespace

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng, double scale) {
  if (dim < 1) throw std::invalid_argument("random_hermitian: dim must be >= 1");
  ComplexMatrix g = random_gaussian(dim, rng);
  return scale * 0.5 * (g + g.adjoint()).eval();
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("random_unitary: dim must be >= 1");
  Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(dim, rng));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    Complex d = r(k, k);
    double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_well_conditioned(int dim, std::mt19937_64& rng,
                                      double sv_min, double sv_max) {
  if (dim < 1) throw std::invalid_argument("random_well_conditioned: dim must be >= 1");
  if (!(0.0 < sv_min && sv_min <= sv_max))
    throw std::invalid_argument("random_well_conditioned: need 0 < sv_min <= sv_max");
  ComplexMatrix q1 = random_unitary(dim, rng);
  ComplexMatrix q2 = random_unitary(dim, rng);
  std::uniform_real_distribution<double> sv(sv_min, sv_max);
  Eigen::VectorXd s(dim);
  for (int k = 0; k < dim; ++k) s(k) = sv(rng);
  return q1 * s.asDiagonal() * q2;
}

}  // namespace pherm
