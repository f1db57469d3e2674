#pragma once

#include <utility>
#include <vector>

#include "pherm/linalg.hpp"

namespace pherm {

/// Positive-definite metric theta together with a factor B such that
/// theta = B† B.
struct MetricPair {
  ComplexMatrix theta;
  ComplexMatrix factor;
};

enum class SpectrumKind { AllReal, ConjugatePairs };

/// Spectrum classification of a diagonalizable operator: either purely real
/// or non-real eigenvalues matched into conjugate pairs (index pairs refer to
/// the (Re, Im)-sorted eigenvalue order of eig / eigenvalues_only).
struct SpectrumClass {
  SpectrumKind kind = SpectrumKind::AllReal;
  std::vector<std::pair<int, int>> pairs;
};

/// ||H† eta - eta H|| / (||eta|| ||H||). Zero within tolerance certifies that
/// H is pseudo-Hermitian with respect to eta. Requires eta Hermitian and
/// invertible.
double pseudo_residual(const ComplexMatrix& h, const ComplexMatrix& eta);

/// AllReal iff max |Im w| < tol * max(1, max |w|); otherwise non-real
/// eigenvalues are greedily matched to their nearest conjugates. Unmatched
/// non-real eigenvalues raise std::runtime_error.
SpectrumClass classify_spectrum(const ComplexMatrix& h, double tol = 1e-8);

/// Metric construction for a real-spectrum quasi-Hermitian H: the left
/// eigenvectors are scaled so that L† R = I and theta = L L†, which maps each
/// right eigenvector onto its left partner. The factor is the Cholesky-based
/// one, and the intertwining residual ||H† theta - theta H||/(||theta|| ||H||)
/// is checked against `intertwine_tol`. Complex spectrum is an error (no
/// positive-definite metric exists).
MetricPair build_metric(const ComplexMatrix& h, double spectrum_tol = 1e-8,
                        double intertwine_tol = 1e-10);

/// h = B H B^-1, the Hermitian-picture image of H. The result is checked to
/// be Hermitian within `hermitian_tol`.
ComplexMatrix to_hermitian_picture(const ComplexMatrix& h, const MetricPair& pair,
                                   double hermitian_tol = 1e-9);

/// A~ = B^-1 A B, the quasi-Hermitian-picture image of an observable.
ComplexMatrix transform_observable(const ComplexMatrix& a, const MetricPair& pair);

}  // namespace pherm
