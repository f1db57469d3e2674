#pragma once

#include <complex>
#include <vector>

#include "pherm/linalg.hpp"

namespace pherm {

/// One term c * t^m * e^{i w t} of an exponential-polynomial in t.
struct ExpTerm {
  Complex coef;
  int power = 0;
  double freq = 0.0;
};

/// Finite sum of terms c * t^m * e^{i w t}, closed under addition,
/// multiplication and the definite integral from 0 to t. Frequencies within
/// 1e-12 of zero are treated as resonant (the integral then raises the
/// polynomial power instead of dividing by the frequency), and terms whose
/// frequencies agree within that tolerance are merged.
class ExpPoly {
 public:
  static constexpr double kFreqTol = 1e-12;

  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpTerm> terms);

  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly constant(Complex c);
  /// c * e^{i w t}
  static ExpPoly exponential(Complex c, double freq);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExpPoly& operator+=(const ExpPoly& other);
  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  ExpPoly operator*(const ExpPoly& other) const;
  ExpPoly scaled(Complex factor) const;

  /// Exact antiderivative evaluated between 0 and t.
  ExpPoly integrate_from_zero() const;

  /// Evaluate at complex t (imaginary time t = -i beta included).
  Complex eval(Complex t) const;

  /// Largest |coef| over terms; 0 for the zero polynomial.
  double max_coef() const;

 private:
  void normalize();
  std::vector<ExpTerm> terms_;  // sorted by (freq, power), merged
};

/// Square matrix of exponential-polynomials.
class ExpPolyMatrix {
 public:
  ExpPolyMatrix() = default;
  explicit ExpPolyMatrix(int dim) : dim_(dim), entries_(dim * dim) {}

  static ExpPolyMatrix identity(int dim);

  int dim() const { return dim_; }
  ExpPoly& operator()(int i, int j) { return entries_[i * dim_ + j]; }
  const ExpPoly& operator()(int i, int j) const { return entries_[i * dim_ + j]; }

  ExpPolyMatrix operator*(const ExpPolyMatrix& other) const;
  ExpPolyMatrix scaled(Complex factor) const;
  ExpPolyMatrix integrate_from_zero() const;
  ComplexMatrix eval(Complex t) const;

 private:
  int dim_ = 0;
  std::vector<ExpPoly> entries_;
};

}  // namespace pherm
