#ifndef MOUFANG_JET_HPP
#define MOUFANG_JET_HPP

#include <Eigen/Core>
#include <cmath>

#include "moufang/errors.hpp"

namespace moufang {

/// Second-order forward-mode jet over D seed directions.
///
/// A Jet2 carries a value, a gradient and a symmetric Hessian and propagates
/// them through +, -, *, / and sqrt, so any function written against a
/// generic scalar yields machine-precision first and second derivatives in
/// one evaluation. Every multi-term Hessian update computes one triangle and
/// mirrors it, keeping the matrix bitwise symmetric under any combination of
/// compiler vectorization and FMA contraction.
template <int D>
struct Jet2 {
  using Grad = Eigen::Matrix<double, D, 1>;
  using Hess = Eigen::Matrix<double, D, D>;

  double a = 0.0;
  Grad g = Grad::Zero();
  Hess h = Hess::Zero();

  Jet2() = default;
  Jet2(double value) : a(value) {}  // implicit: constants mix freely

  /// Seeds direction `index` with unit first derivative.
  static Jet2 variable(double value, int index) {
    Jet2 j(value);
    j.g(index) = 1.0;
    return j;
  }

  double value() const { return a; }
};

namespace detail {

template <int D>
inline void mirror_upper(Eigen::Matrix<double, D, D>& h) {
  for (int i = 0; i < D; ++i)
    for (int j = i + 1; j < D; ++j) h(j, i) = h(i, j);
}

}  // namespace detail

template <int D>
inline Jet2<D> operator+(const Jet2<D>& x, const Jet2<D>& y) {
  Jet2<D> r;
  r.a = x.a + y.a;
  r.g = x.g + y.g;
  r.h = x.h + y.h;
  return r;
}

template <int D>
inline Jet2<D> operator-(const Jet2<D>& x, const Jet2<D>& y) {
  Jet2<D> r;
  r.a = x.a - y.a;
  r.g = x.g - y.g;
  r.h = x.h - y.h;
  return r;
}

template <int D>
inline Jet2<D> operator-(const Jet2<D>& x) {
  Jet2<D> r;
  r.a = -x.a;
  r.g = -x.g;
  r.h = -x.h;
  return r;
}

template <int D>
inline Jet2<D> operator*(const Jet2<D>& x, const Jet2<D>& y) {
  Jet2<D> r;
  r.a = x.a * y.a;
  r.g = x.a * y.g + y.a * x.g;
  for (int i = 0; i < D; ++i)
    for (int j = i; j < D; ++j)
      r.h(i, j) = x.a * y.h(i, j) + y.a * x.h(i, j) + x.g(i) * y.g(j) + y.g(i) * x.g(j);
  detail::mirror_upper(r.h);
  return r;
}

template <int D>
inline Jet2<D> reciprocal(const Jet2<D>& x) {
  const double inv = 1.0 / x.a;
  const double c1 = -(inv * inv);
  const double c2 = 2.0 * inv * inv * inv;
  Jet2<D> r;
  r.a = inv;
  r.g = c1 * x.g;
  for (int i = 0; i < D; ++i)
    for (int j = i; j < D; ++j) r.h(i, j) = c1 * x.h(i, j) + c2 * (x.g(i) * x.g(j));
  detail::mirror_upper(r.h);
  return r;
}

template <int D>
inline Jet2<D> operator/(const Jet2<D>& x, const Jet2<D>& y) {
  return x * reciprocal(y);
}

template <int D>
inline Jet2<D> sqrt(const Jet2<D>& x) {
  using std::sqrt;
  const double s = sqrt(x.a);
  const double c1 = 1.0 / (2.0 * s);
  const double c2 = -1.0 / (4.0 * s * s * s);
  Jet2<D> r;
  r.a = s;
  r.g = c1 * x.g;
  for (int i = 0; i < D; ++i)
    for (int j = i; j < D; ++j) r.h(i, j) = c1 * x.h(i, j) + c2 * (x.g(i) * x.g(j));
  detail::mirror_upper(r.h);
  return r;
}

// double <-> jet mixed arithmetic; a double is a constant jet.
template <int D> inline Jet2<D> operator+(double c, const Jet2<D>& x) { return Jet2<D>(c) + x; }
template <int D> inline Jet2<D> operator+(const Jet2<D>& x, double c) { return x + Jet2<D>(c); }
template <int D> inline Jet2<D> operator-(double c, const Jet2<D>& x) { return Jet2<D>(c) - x; }
template <int D> inline Jet2<D> operator-(const Jet2<D>& x, double c) { return x - Jet2<D>(c); }
template <int D> inline Jet2<D> operator*(double c, const Jet2<D>& x) {
  Jet2<D> r;
  r.a = c * x.a;
  r.g = c * x.g;
  r.h = c * x.h;
  return r;
}
template <int D> inline Jet2<D> operator*(const Jet2<D>& x, double c) { return c * x; }
template <int D> inline Jet2<D> operator/(const Jet2<D>& x, double c) { return x * (1.0 / c); }
template <int D> inline Jet2<D> operator/(double c, const Jet2<D>& x) { return c * reciprocal(x); }

/// Value extraction that also works on plain doubles, so domain checks can be
/// written once inside scalar-generic code.
inline double scalar_value(double x) { return x; }
template <int D>
inline double scalar_value(const Jet2<D>& x) { return x.a; }

inline double sqrt(double x) { return std::sqrt(x); }

}

#endif
