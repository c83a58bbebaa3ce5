#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mtc {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Sized for theory-rank dimensions
// (at most a few hundred rows), so no attempt at sparse or blocked storage.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<Complex>& d);

  CMatrix transpose() const;
  CMatrix conjugate() const;
  CMatrix adjoint() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  // max_{ij} |a_ij - b_ij|
  double max_abs_diff(const CMatrix& other) const;
  // max_{ij} |a_ij - a_ji|
  double symmetry_residual() const;
  // max_{ij} |(A A^dag - I)_ij|
  double unitarity_residual() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

}  // namespace mtc
