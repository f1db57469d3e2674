#pragma once

#include <random>

#include "pherm/linalg.hpp"

namespace pherm {

/// Gaussian Hermitian matrix, entries O(scale).
ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng, double scale = 1.0);

/// Haar-ish unitary from the QR decomposition of a Gaussian matrix, with the
/// R-diagonal phases absorbed so the result is deterministic per rng state.
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

/// Invertible matrix Q1 * diag(s) * Q2 with singular values drawn uniformly
/// from [sv_min, sv_max]; the condition number is bounded by sv_max/sv_min.
ComplexMatrix random_well_conditioned(int dim, std::mt19937_64& rng,
                                      double sv_min = 0.5, double sv_max = 2.0);

}  // namespace pherm
