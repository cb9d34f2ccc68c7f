#pragma once

// Small dense vectors / matrices / rank-3 tensors over a generic scalar.
// Dimensions here are chart dimensions (<= 16 in practice), so everything is
// plain dense storage; the big dense operator matrices of the torus module
// use Eigen instead.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "acg/dual.hpp"
#include "acg/errors.hpp"

namespace acg {

template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : d_(n, T(0.0)) {}
  Vec(std::initializer_list<T> xs) : d_(xs) {}
  static Vec basis(int n, int i) { Vec v(n); v[i] = T(1.0); return v; }

  int size() const { return static_cast<int>(d_.size()); }
  T& operator[](int i) { return d_[i]; }
  const T& operator[](int i) const { return d_[i]; }
  auto begin() { return d_.begin(); }
  auto end() { return d_.end(); }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }

  Vec& operator+=(const Vec& o) { for (int i = 0; i < size(); ++i) d_[i] += o[i]; return *this; }
  Vec& operator-=(const Vec& o) { for (int i = 0; i < size(); ++i) d_[i] -= o[i]; return *this; }

 private:
  std::vector<T> d_;
};

template <class T> Vec<T> operator+(Vec<T> a, const Vec<T>& b) { a += b; return a; }
template <class T> Vec<T> operator-(Vec<T> a, const Vec<T>& b) { a -= b; return a; }
template <class T> Vec<T> operator-(const Vec<T>& a) { Vec<T> r(a.size()); for (int i = 0; i < a.size(); ++i) r[i] = -a[i]; return r; }
template <class T, class S> Vec<T> operator*(const S& s, const Vec<T>& a) {
  Vec<T> r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

template <class T> double norm_inf(const Vec<T>& a) {
  double m = 0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(val(a[i])));
  return m;
}

inline Vec<double> to_vec(const std::vector<double>& p) {
  Vec<double> v(static_cast<int>(p.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = p[i];
  return v;
}

// Lift a double point into the dual tower (zero seeds).
template <class T> Vec<T> lift(const Vec<double>& p) {
  Vec<T> q(p.size());
  for (int i = 0; i < p.size(); ++i) q[i] = T(p[i]);
  return q;
}

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int r, int c) : r_(r), c_(c), d_(static_cast<size_t>(r) * c, T(0.0)) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  Mat& operator+=(const Mat& o) { for (size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i]; return *this; }
  Mat& operator-=(const Mat& o) { for (size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i]; return *this; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

template <class T> Mat<T> operator+(Mat<T> a, const Mat<T>& b) { a += b; return a; }
template <class T> Mat<T> operator-(Mat<T> a, const Mat<T>& b) { a -= b; return a; }
template <class T, class S> Mat<T> operator*(const S& s, const Mat<T>& a) {
  Mat<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

template <class T> Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <class T> Vec<T> operator*(const Mat<T>& a, const Vec<T>& x) {
  Vec<T> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

template <class T> Mat<T> transpose(const Mat<T>& a) {
  Mat<T> r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class T> double norm_inf(const Mat<T>& a) {
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(val(a(i, j))));
  return m;
}

// LU inverse with partial pivoting; pivots compare leading double values so
// the routine works throughout the dual tower.
template <class T> Mat<T> inverse(const Mat<T>& a) {
  int n = a.rows();
  Mat<T> lu = a, inv = Mat<T>::identity(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(val(lu(col, col)));
    for (int r = col + 1; r < n; ++r) {
      double m = std::abs(val(lu(r, col)));
      if (m > best) { best = m; piv = r; }
    }
    if (best == 0.0) throw Error("singular matrix in inverse()");
    if (piv != col) {
      for (int j = 0; j < n; ++j) { std::swap(lu(piv, j), lu(col, j)); std::swap(inv(piv, j), inv(col, j)); }
    }
    T ipv = T(1.0) / lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      T f = lu(r, col) * ipv;
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
      for (int j = 0; j < n; ++j) inv(r, j) -= f * inv(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    T ipv = T(1.0) / lu(col, col);
    for (int j = 0; j < n; ++j) inv(col, j) = inv(col, j) * ipv;
    for (int r = 0; r < col; ++r) {
      T f = lu(r, col);
      for (int j = 0; j < n; ++j) inv(r, j) -= f * inv(col, j);
    }
  }
  return inv;
}

// Rank-3 tensor, components t(k,i,j); used for Christoffel symbols G^k_ij
// and (2,1)-tensors T^k_ij (value index first).
template <class T>
class Ten3 {
 public:
  Ten3() = default;
  Ten3(int n0, int n1, int n2)
      : n0_(n0), n1_(n1), n2_(n2), d_(static_cast<size_t>(n0) * n1 * n2, T(0.0)) {}

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }
  T& operator()(int k, int i, int j) { return d_[(static_cast<size_t>(k) * n1_ + i) * n2_ + j]; }
  const T& operator()(int k, int i, int j) const { return d_[(static_cast<size_t>(k) * n1_ + i) * n2_ + j]; }

  Ten3& operator+=(const Ten3& o) { for (size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i]; return *this; }
  Ten3& operator-=(const Ten3& o) { for (size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i]; return *this; }

  // Value of the bilinear map on a pair of vectors: T(x,y)^k = t(k,i,j) x^i y^j.
  Vec<T> apply(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> r(n0_);
    for (int k = 0; k < n0_; ++k) {
      T s(0.0);
      for (int i = 0; i < n1_; ++i)
        for (int j = 0; j < n2_; ++j) s += (*this)(k, i, j) * x[i] * y[j];
      r[k] = s;
    }
    return r;
  }

 private:
  int n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<T> d_;
};

template <class T> Ten3<T> operator+(Ten3<T> a, const Ten3<T>& b) { a += b; return a; }
template <class T> Ten3<T> operator-(Ten3<T> a, const Ten3<T>& b) { a -= b; return a; }
template <class T, class S> Ten3<T> operator*(const S& s, const Ten3<T>& a) {
  Ten3<T> r(a.dim0(), a.dim1(), a.dim2());
  for (int k = 0; k < a.dim0(); ++k)
    for (int i = 0; i < a.dim1(); ++i)
      for (int j = 0; j < a.dim2(); ++j) r(k, i, j) = s * a(k, i, j);
  return r;
}

template <class T> double norm_inf(const Ten3<T>& a) {
  double m = 0;
  for (int k = 0; k < a.dim0(); ++k)
    for (int i = 0; i < a.dim1(); ++i)
      for (int j = 0; j < a.dim2(); ++j) m = std::max(m, std::abs(val(a(k, i, j))));
  return m;
}

}  // namespace acg
