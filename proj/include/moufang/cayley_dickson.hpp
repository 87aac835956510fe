#ifndef MOUFANG_CAYLEY_DICKSON_HPP
#define MOUFANG_CAYLEY_DICKSON_HPP

#include <array>
#include <cstddef>

#include "moufang/errors.hpp"
#include "moufang/jet.hpp"

namespace moufang {

/// Cayley-Dickson algebras of dimension 1, 2, 4, 8 over a generic scalar:
/// reals, complexes, quaternions, octonions. Basis order is 1, e1, ..., e_{N-1},
/// with each doubling step appending the new imaginary unit e_{N/2} = (0, 1).
///
/// Doubling rule used throughout (one fixed convention, see
/// docs/octonion-table.md for the full signed product table it generates):
///
///     (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))
///     conj((a, b))  = (conj(a), -b)
///
/// Under this convention e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
namespace cd {

template <class Scalar, int N>
using Elem = std::array<Scalar, N>;

namespace detail {

template <class Scalar, int N>
inline Elem<Scalar, N / 2> lower(const Elem<Scalar, N>& x) {
  Elem<Scalar, N / 2> r;
  for (int i = 0; i < N / 2; ++i) r[i] = x[i];
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N / 2> upper(const Elem<Scalar, N>& x) {
  Elem<Scalar, N / 2> r;
  for (int i = 0; i < N / 2; ++i) r[i] = x[N / 2 + i];
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N> join(const Elem<Scalar, N / 2>& lo, const Elem<Scalar, N / 2>& hi) {
  Elem<Scalar, N> r;
  for (int i = 0; i < N / 2; ++i) {
    r[i] = lo[i];
    r[N / 2 + i] = hi[i];
  }
  return r;
}

}  // namespace detail

template <class Scalar, int N>
inline Elem<Scalar, N> conjugate(const Elem<Scalar, N>& x) {
  Elem<Scalar, N> r = x;
  for (int i = 1; i < N; ++i) r[i] = -x[i];
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N> add(const Elem<Scalar, N>& x, const Elem<Scalar, N>& y) {
  Elem<Scalar, N> r;
  for (int i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N> sub(const Elem<Scalar, N>& x, const Elem<Scalar, N>& y) {
  Elem<Scalar, N> r;
  for (int i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N> multiply(const Elem<Scalar, N>& x, const Elem<Scalar, N>& y) {
  if constexpr (N == 1) {
    return Elem<Scalar, 1>{x[0] * y[0]};
  } else {
    constexpr int H = N / 2;
    const auto a = detail::lower<Scalar, N>(x);
    const auto b = detail::upper<Scalar, N>(x);
    const auto c = detail::lower<Scalar, N>(y);
    const auto d = detail::upper<Scalar, N>(y);
    const auto lo = sub<Scalar, H>(multiply<Scalar, H>(a, c),
                                   multiply<Scalar, H>(conjugate<Scalar, H>(d), b));
    const auto hi = add<Scalar, H>(multiply<Scalar, H>(d, a),
                                   multiply<Scalar, H>(b, conjugate<Scalar, H>(c)));
    return detail::join<Scalar, N>(lo, hi);
  }
}

template <class Scalar, int N>
inline Scalar norm_squared(const Elem<Scalar, N>& x) {
  Scalar s = x[0] * x[0];
  for (int i = 1; i < N; ++i) s = s + x[i] * x[i];
  return s;
}

/// conj(x) / |x|^2. Throws on (numerically) zero norm.
template <class Scalar, int N>
inline Elem<Scalar, N> inverse(const Elem<Scalar, N>& x) {
  const Scalar n2 = norm_squared<Scalar, N>(x);
  if (scalar_value(n2) <= 0.0) {
    throw std::domain_error("cayley-dickson inverse of zero-norm element");
  }
  Elem<Scalar, N> r = conjugate<Scalar, N>(x);
  for (int i = 0; i < N; ++i) r[i] = r[i] / n2;
  return r;
}

template <class Scalar, int N>
inline Elem<Scalar, N> one() {
  Elem<Scalar, N> r{};
  r[0] = Scalar(1.0);
  return r;
}

/// Basis element e_k (k = 0 is the real unit).
template <class Scalar, int N>
inline Elem<Scalar, N> basis(int k) {
  Elem<Scalar, N> r{};
  r[k] = Scalar(1.0);
  return r;
}

}  // namespace cd

template <class Scalar> using Octonion = cd::Elem<Scalar, 8>;
template <class Scalar> using Quaternion = cd::Elem<Scalar, 4>;

}

#endif
