#include "pherm/expoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pherm {

namespace {

bool same_freq(double a, double b) {
  return std::abs(a - b) <= ExpPoly::kFreqTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
  normalize();
}

ExpPoly ExpPoly::constant(Complex c) {
  return ExpPoly({ExpTerm{c, 0, 0.0}});
}

ExpPoly ExpPoly::exponential(Complex c, double freq) {
  return ExpPoly({ExpTerm{c, 0, freq}});
}

void ExpPoly::normalize() {
  for (auto& t : terms_) {
    if (t.power < 0) throw std::invalid_argument("ExpPoly: negative power");
    if (std::abs(t.freq) < kFreqTol) t.freq = 0.0;
  }
  std::sort(terms_.begin(), terms_.end(), [](const ExpTerm& a, const ExpTerm& b) {
    if (a.freq != b.freq) return a.freq < b.freq;
    return a.power < b.power;
  });
  std::vector<ExpTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().power == t.power &&
        same_freq(merged.back().freq, t.freq)) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const ExpTerm& t) { return t.coef == Complex(0, 0); }),
               merged.end());
  terms_ = std::move(merged);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

ExpPoly ExpPoly::operator*(const ExpPoly& other) const {
  std::vector<ExpTerm> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      prod.push_back(ExpTerm{a.coef * b.coef, a.power + b.power, a.freq + b.freq});
  return ExpPoly(std::move(prod));
}

ExpPoly ExpPoly::scaled(Complex factor) const {
  std::vector<ExpTerm> scaled_terms = terms_;
  for (auto& t : scaled_terms) t.coef *= factor;
  return ExpPoly(std::move(scaled_terms));
}

ExpPoly ExpPoly::integrate_from_zero() const {
  std::vector<ExpTerm> result;
  for (const auto& t : terms_) {
    if (t.freq == 0.0) {
      // resonant: int_0^t s^m ds = t^{m+1}/(m+1)
      result.push_back(ExpTerm{t.coef / double(t.power + 1), t.power + 1, 0.0});
      continue;
    }
    // int_0^t s^m e^{iws} ds =
    //   e^{iwt} sum_{j=0}^{m} (-1)^j m!/(m-j)! t^{m-j} / (iw)^{j+1}
    //   - (-1)^m m! / (iw)^{m+1}
    const Complex iw(0.0, t.freq);
    Complex fall = 1.0;  // m!/(m-j)! accumulated
    Complex ipow = iw;   // (iw)^{j+1}
    double sign = 1.0;
    for (int j = 0; j <= t.power; ++j) {
      result.push_back(ExpTerm{t.coef * sign * fall / ipow, t.power - j, t.freq});
      if (j == t.power)
        result.push_back(ExpTerm{-t.coef * sign * fall / ipow, 0, 0.0});
      fall *= double(t.power - j);
      ipow *= iw;
      sign = -sign;
    }
  }
  return ExpPoly(std::move(result));
}

Complex ExpPoly::eval(Complex t) const {
  Complex sum(0, 0);
  for (const auto& term : terms_) {
    Complex value = term.coef;
    for (int p = 0; p < term.power; ++p) value *= t;
    sum += value * std::exp(Complex(0, term.freq) * t);
  }
  return sum;
}

double ExpPoly::max_coef() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  return m;
}

ExpPolyMatrix ExpPolyMatrix::identity(int dim) {
  ExpPolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = ExpPoly::constant(Complex(1, 0));
  return m;
}

ExpPolyMatrix ExpPolyMatrix::operator*(const ExpPolyMatrix& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("ExpPolyMatrix: dimension mismatch");
  ExpPolyMatrix result(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ExpPoly acc;
      for (int k = 0; k < dim_; ++k) {
        const ExpPoly& a = (*this)(i, k);
        const ExpPoly& b = other(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      result(i, j) = std::move(acc);
    }
  return result;
}

ExpPolyMatrix ExpPolyMatrix::scaled(Complex factor) const {
  ExpPolyMatrix result(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) result(i, j) = (*this)(i, j).scaled(factor);
  return result;
}

ExpPolyMatrix ExpPolyMatrix::integrate_from_zero() const {
  ExpPolyMatrix result(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      result(i, j) = (*this)(i, j).integrate_from_zero();
  return result;
}

ComplexMatrix ExpPolyMatrix::eval(Complex t) const {
  ComplexMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).eval(t);
  return m;
}

}  // namespace pherm
