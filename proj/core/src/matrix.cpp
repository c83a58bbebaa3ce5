#include "mtc/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace mtc {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::conjugate() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) m.a_[i] = std::conj(a_[i]);
  return m;
}

CMatrix CMatrix::adjoint() const { return transpose().conjugate(); }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  return worst;
}

double CMatrix::symmetry_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

double CMatrix::unitarity_residual() const {
  return ((*this) * adjoint()).max_abs_diff(identity(n_));
}

}  // namespace mtc
