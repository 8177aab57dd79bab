#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "qusp/kernels.hpp"

namespace qusp {

/// Row-major square matrix; sizes here stay below a few hundred.
template <class Real>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, Real(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Real& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Real> data() noexcept { return data_; }
  std::span<const Real> data() const noexcept { return data_; }

  DenseMatrix transposed() const {
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    assert(o.n_ == n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    assert(o.n_ == n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(const Real& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const Real& s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.n_ == b.n_);
    DenseMatrix c(a.n_);
    kernels::matmul<Real>(a.data(), b.data(), a.n_, c.data());
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Real> data_;
};

/// Largest absolute entry.
template <class Real>
Real max_abs(const DenseMatrix<Real>& m) {
  using std::abs;
  Real best(0);
  for (const Real& v : m.data()) best = std::max<Real>(best, abs(v));
  return best;
}

/// Complex matrix kept as separate real and imaginary parts.
template <class Real>
struct ComplexMatrix {
  DenseMatrix<Real> re;
  DenseMatrix<Real> im;

  explicit ComplexMatrix(std::size_t n = 0) : re(n), im(n) {}
  ComplexMatrix(DenseMatrix<Real> real, DenseMatrix<Real> imag)
      : re(std::move(real)), im(std::move(imag)) {}

  std::size_t size() const noexcept { return re.size(); }

  ComplexMatrix adjoint() const { return {re.transposed(), Real(-1) * im.transposed()}; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// (c + i s) * a
  static ComplexMatrix scaled(const Real& c, const Real& s, const ComplexMatrix& a) {
    return {c * a.re - s * a.im, c * a.im + s * a.re};
  }
};

/// Largest complex modulus among the entries.
template <class Real>
Real max_abs(const ComplexMatrix<Real>& m) {
  using std::sqrt;
  Real best(0);
  const auto re = m.re.data();
  const auto im = m.im.data();
  for (std::size_t i = 0; i < re.size(); ++i) {
    best = std::max<Real>(best, sqrt(re[i] * re[i] + im[i] * im[i]));
  }
  return best;
}

}  // namespace qusp
