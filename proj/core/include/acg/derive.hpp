#pragma once

// Derivative engine: forward-mode directional derivatives through the dual
// tower, a 4th-order central-difference oracle (the independent second
// derivative path every identity test uses), and the Lie bracket.

#include "acg/field.hpp"

namespace acg {

template <class T>
Vec<Dual<T>> seed(const Vec<T>& p, const Vec<T>& dir) {
  Vec<Dual<T>> q(p.size());
  for (int i = 0; i < p.size(); ++i) q[i] = Dual<T>(p[i], dir[i]);
  return q;
}

template <class T> T unseed(const Dual<T>& x) { return x.du; }
template <class T> Vec<T> unseed(const Vec<Dual<T>>& x) {
  Vec<T> r(x.size());
  for (int i = 0; i < x.size(); ++i) r[i] = x[i].du;
  return r;
}
template <class T> Mat<T> unseed(const Mat<Dual<T>>& x) {
  Mat<T> r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j).du;
  return r;
}
template <class T> Ten3<T> unseed(const Ten3<Dual<T>>& x) {
  Ten3<T> r(x.dim0(), x.dim1(), x.dim2());
  for (int k = 0; k < x.dim0(); ++k)
    for (int i = 0; i < x.dim1(); ++i)
      for (int j = 0; j < x.dim2(); ++j) r(k, i, j) = x(k, i, j).du;
  return r;
}

// Exact directional derivative of a field along dir at p.
template <class Field, class T>
auto dir_deriv(const Field& f, const Vec<T>& p, const Vec<T>& dir) {
  return unseed(f.at(seed(p, dir)));
}

// 4th-order central differences, the method-independent oracle.
inline constexpr double kFdStep = 1e-5;

template <class Field>
auto fd_dir_deriv(const Field& f, const Vec<double>& p, const Vec<double>& dir, double h = kFdStep) {
  auto shift = [&](double t) {
    Vec<double> q = p;
    for (int i = 0; i < q.size(); ++i) q[i] += t * dir[i];
    return f.at(q);
  };
  auto r = (1.0 / (12 * h)) * (shift(-2 * h) - shift(2 * h));
  r += (8.0 / (12 * h)) * (shift(h) - shift(-h));
  return r;
}

// Lie bracket [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k at p.
template <class T>
Vec<T> lie_bracket(const VecField& X, const VecField& Y, const Vec<T>& p) {
  if (!X.chart().same_as(Y.chart())) throw ChartError("lie_bracket: fields on different charts");
  Vec<T> xv = X.at(p), yv = Y.at(p);
  return dir_deriv(Y, p, xv) - dir_deriv(X, p, yv);
}

}  // namespace acg
