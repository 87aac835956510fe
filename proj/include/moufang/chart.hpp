#ifndef MOUFANG_CHART_HPP
#define MOUFANG_CHART_HPP

#include <array>

#include "moufang/cayley_dickson.hpp"
#include "moufang/errors.hpp"
#include "moufang/jet.hpp"

namespace moufang {

/// Graph chart on the unit sphere of a Cayley-Dickson algebra: a chart point
/// x with |x| < 1 is the imaginary part, the real part is recovered as
/// sqrt(1 - |x|^2) > 0. The unit element sits at the origin.
///
/// embed:   x in R^{N-1}, |x| < 1        ->  (sqrt(1 - |x|^2), x)
/// project: unit element with o[0] > 0   ->  (o[1], ..., o[N-1])
namespace chart {

template <class Scalar, int N>
inline cd::Elem<Scalar, N> embed(const std::array<Scalar, N - 1>& x) {
  Scalar n2 = x[0] * x[0];
  for (int i = 1; i < N - 1; ++i) n2 = n2 + x[i] * x[i];
  if (scalar_value(n2) >= 1.0) {
    throw ChartDomainError("chart point outside unit ball");
  }
  cd::Elem<Scalar, N> o;
  o[0] = sqrt(1.0 - n2);
  for (int i = 0; i < N - 1; ++i) o[i + 1] = x[i];
  return o;
}

template <class Scalar, int N>
inline std::array<Scalar, N - 1> project(const cd::Elem<Scalar, N>& o) {
  if (scalar_value(o[0]) <= 0.0) {
    throw ChartDomainError("element outside chart (non-positive real part)");
  }
  std::array<Scalar, N - 1> x;
  for (int i = 0; i < N - 1; ++i) x[i] = o[i + 1];
  return x;
}

}  // namespace chart

}

#endif
