#pragma once

// Forward-mode dual numbers, nestable. Dual<double> carries one directional
// derivative; Dual<Dual<double>> carries second derivatives along a pair of
// seeded directions, and so on. The whole evaluation stack is generic in the
// scalar so that derived fields (connections built from J, corrected
// structures built from Nijenhuis values, ...) stay exactly differentiable.

#include <cmath>
#include <iosfwd>

namespace acg {

template <class T>
struct Dual {
  T re{};  // value
  T du{};  // derivative along the seeded direction

  Dual() = default;
  Dual(double v) : re(v), du(0.0) {}  // NOLINT: implicit on purpose
  Dual(T v, T d) : re(std::move(v)), du(std::move(d)) {}

  Dual& operator+=(const Dual& o) { re += o.re; du += o.du; return *this; }
  Dual& operator-=(const Dual& o) { re -= o.re; du -= o.du; return *this; }
};

using D0 = double;
using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;

// Leading double value of an arbitrarily nested dual.
inline double val(double x) { return x; }
template <class T> double val(const Dual<T>& x) { return val(x.re); }

// First-level derivative value.
template <class T> double dval(const Dual<T>& x) { return val(x.du); }

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.re + b.re, a.du + b.du}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.re - b.re, a.du - b.du}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.re, -a.du}; }
template <class T> Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}
template <class T> Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  T inv = T(1.0) / b.re;
  T q = a.re * inv;
  return {q, (a.du - q * b.du) * inv};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double b) { return a + Dual<T>(b); }
template <class T> Dual<T> operator+(double a, const Dual<T>& b) { return Dual<T>(a) + b; }
template <class T> Dual<T> operator-(const Dual<T>& a, double b) { return a - Dual<T>(b); }
template <class T> Dual<T> operator-(double a, const Dual<T>& b) { return Dual<T>(a) - b; }
template <class T> Dual<T> operator*(const Dual<T>& a, double b) { return {a.re * T(b), a.du * T(b)}; }
template <class T> Dual<T> operator*(double a, const Dual<T>& b) { return b * a; }
template <class T> Dual<T> operator/(const Dual<T>& a, double b) { return {a.re / T(b), a.du / T(b)}; }
template <class T> Dual<T> operator/(double a, const Dual<T>& b) { return Dual<T>(a) / b; }

using std::abs;
using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;

template <class T> Dual<T> sin(const Dual<T>& x) { return {sin(x.re), x.du * cos(x.re)}; }
template <class T> Dual<T> cos(const Dual<T>& x) { return {cos(x.re), -(x.du * sin(x.re))}; }
template <class T> Dual<T> exp(const Dual<T>& x) { T e = exp(x.re); return {e, x.du * e}; }
template <class T> Dual<T> log(const Dual<T>& x) { return {log(x.re), x.du / x.re}; }
template <class T> Dual<T> sqrt(const Dual<T>& x) { T s = sqrt(x.re); return {s, x.du / (2.0 * s)}; }

// |x| with the derivative of the active branch; not differentiable at 0.
template <class T> Dual<T> abs(const Dual<T>& x) { return val(x.re) < 0 ? -x : x; }

template <class T> T ipow(const T& x, long n) {
  if (n < 0) return T(1.0) / ipow(x, -n);
  T r(1.0), b = x;
  for (; n; n >>= 1, b = b * b)
    if (n & 1) r = r * b;
  return r;
}

// x^y for non-integer y; valid for x > 0 (chain rule through the leading value).
template <class T> Dual<T> pow(const Dual<T>& x, double y) {
  T p = pow(x.re, y);
  return {p, x.du * (y * pow(x.re, y - 1.0))};
}
template <class T> Dual<T> pow(const Dual<T>& x, const Dual<T>& y) { return exp(y * log(x)); }

}  // namespace acg
