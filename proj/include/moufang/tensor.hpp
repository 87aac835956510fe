#ifndef MOUFANG_TENSOR_HPP
#define MOUFANG_TENSOR_HPP

#include <array>
#include <cmath>

namespace moufang {

/// Dense rank-3 tensor with compile-time extents, indexed T(i, j, k).
template <int N0, int N1, int N2>
struct Tensor3 {
  std::array<double, static_cast<std::size_t>(N0) * N1 * N2> d{};

  double& operator()(int i, int j, int k) { return d[(i * N1 + j) * N2 + k]; }
  double operator()(int i, int j, int k) const { return d[(i * N1 + j) * N2 + k]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : d) m = std::max(m, std::abs(x));
    return m;
  }

  Tensor3 operator-(const Tensor3& o) const {
    Tensor3 r;
    for (std::size_t i = 0; i < d.size(); ++i) r.d[i] = d[i] - o.d[i];
    return r;
  }

  Tensor3 operator+(const Tensor3& o) const {
    Tensor3 r;
    for (std::size_t i = 0; i < d.size(); ++i) r.d[i] = d[i] + o.d[i];
    return r;
  }
};

/// Swap the last two indices: out(i, j, k) = in(i, k, j).
template <int N0, int N1>
inline Tensor3<N0, N1, N1> transpose_last(const Tensor3<N0, N1, N1>& t) {
  Tensor3<N0, N1, N1> r;
  for (int i = 0; i < N0; ++i)
    for (int j = 0; j < N1; ++j)
      for (int k = 0; k < N1; ++k) r(i, j, k) = t(i, k, j);
  return r;
}

}

#endif
