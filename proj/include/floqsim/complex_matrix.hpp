#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace floqsim {

using cd = std::complex<double>;
using Vector = std::vector<cd>;

/// Dense square complex matrix, row-major. Dimension is fixed at
/// construction. Sized for the 4x4 system / 16x16 superoperator problems
/// of this library, but works at any small dimension.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(dim * dim, cd(0.0, 0.0)) {
    assert(dim > 0);
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  cd& operator()(int r, int c) { return a_[r * dim_ + c]; }
  const cd& operator()(int r, int c) const { return a_[r * dim_ + c]; }

  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  cd trace() const {
    cd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cd& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cd& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    for (const cd& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    assert(dim_ == o.dim_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    assert(dim_ == o.dim_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  ComplexMatrix& operator*=(cd s) {
    for (cd& v : a_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cd s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    assert(a.dim_ == b.dim_);
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cd aik = a(i, k);
        if (aik == cd(0.0, 0.0)) continue;
        for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  Vector column(int c) const {
    Vector v(dim_);
    for (int r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(int c, const Vector& v) {
    for (int r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
  }

 private:
  int dim_ = 0;
  std::vector<cd> a_;
};

inline Vector matvec(const ComplexMatrix& m, const Vector& v) {
  const int n = m.dim();
  Vector r(n, cd(0.0, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m(i, j) * v[j];
  return r;
}

/// Conjugate-linear in the first argument: sum_i conj(a_i) b_i.
inline cd vdot(const Vector& a, const Vector& b) {
  cd s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double vnorm2(const Vector& a) {
  double s = 0.0;
  for (const cd& v : a) s += std::norm(v);
  return s;
}

inline double vnorm(const Vector& a) { return std::sqrt(vnorm2(a)); }

}  // namespace floqsim
