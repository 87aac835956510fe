#ifndef MOUFANG_FINITE_DIFF_HPP
#define MOUFANG_FINITE_DIFF_HPP

#include <Eigen/Core>
#include <array>
#include <stdexcept>

#include "moufang/errors.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// Central finite differences: the independent oracle against which all
/// jet-computed derivatives are cross-checked.
struct FdConfig {
  double step = 1e-5;
};

namespace detail {

template <int In, class F>
auto fd_try(F&& f, std::array<double, In> x, int dir, double delta) {
  x[dir] += delta;
  return f(x);
}

}  // namespace detail

/// Central-difference Jacobian, error O(step^2). If a probe leaves the
/// domain the step is halved once, then the error propagates.
template <int In, class F>
auto fd_jacobian(F&& f, const std::array<double, In>& base, FdConfig cfg = {}) {
  if (!(cfg.step > 0.0)) throw std::invalid_argument("fd step must be positive");
  auto probe = [&](int dir, double delta) {
    try {
      return detail::fd_try<In>(f, base, dir, delta);
    } catch (const ChartDomainError&) {
      return detail::fd_try<In>(f, base, dir, delta / 2.0);
    }
  };
  auto fp = probe(0, cfg.step);
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(fp)>);
  Eigen::Matrix<double, Out, In> jac;
  for (int j = 0; j < In; ++j) {
    double h = cfg.step;
    std::array<double, In> xp = base, xm = base;
    xp[j] += h;
    xm[j] -= h;
    decltype(fp) vp, vm;
    try {
      vp = f(xp);
      vm = f(xm);
    } catch (const ChartDomainError&) {
      h /= 2.0;
      xp = base;
      xm = base;
      xp[j] += h;
      xm[j] -= h;
      vp = f(xp);
      vm = f(xm);
    }
    for (int m = 0; m < Out; ++m) jac(m, j) = (vp[m] - vm[m]) / (2.0 * h);
  }
  return jac;
}

/// Mixed second derivative of a two-argument map by nested central
/// differences: d^2 f / d arg1^j d arg2^k, error O(step^2).
template <int In1, int In2, class F>
auto fd_mixed_second(F&& f, const std::array<double, In1>& b1,
                     const std::array<double, In2>& b2, FdConfig cfg = {}) {
  const double h = cfg.step;
  auto f00 = f(b1, b2);
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(f00)>);
  Tensor3<Out, In1, In2> t;
  for (int j = 0; j < In1; ++j) {
    for (int k = 0; k < In2; ++k) {
      std::array<double, In1> p = b1, m = b1;
      p[j] += h;
      m[j] -= h;
      std::array<double, In2> q = b2, r = b2;
      q[k] += h;
      r[k] -= h;
      auto fpp = f(p, q), fpm = f(p, r), fmp = f(m, q), fmm = f(m, r);
      for (int i = 0; i < Out; ++i)
        t(i, j, k) = (fpp[i] - fpm[i] - fmp[i] + fmm[i]) / (4.0 * h * h);
    }
  }
  return t;
}

/// Full second derivative in one argument: d^2 f^i / dx^j dx^k.
template <int In, class F>
auto fd_hessian(F&& f, const std::array<double, In>& base, FdConfig cfg = {}) {
  const double h = cfg.step;
  auto f0 = f(base);
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(f0)>);
  Tensor3<Out, In, In> t;
  for (int j = 0; j < In; ++j) {
    for (int k = 0; k < In; ++k) {
      if (j == k) {
        std::array<double, In> p = base, m = base;
        p[j] += h;
        m[j] -= h;
        auto fp = f(p), fm = f(m);
        for (int i = 0; i < Out; ++i) t(i, j, j) = (fp[i] - 2.0 * f0[i] + fm[i]) / (h * h);
      } else {
        std::array<double, In> pp = base, pm = base, mp = base, mm = base;
        pp[j] += h; pp[k] += h;
        pm[j] += h; pm[k] -= h;
        mp[j] -= h; mp[k] += h;
        mm[j] -= h; mm[k] -= h;
        auto fpp = f(pp), fpm = f(pm), fmp = f(mp), fmm = f(mm);
        for (int i = 0; i < Out; ++i)
          t(i, j, k) = (fpp[i] - fpm[i] - fmp[i] + fmm[i]) / (4.0 * h * h);
      }
    }
  }
  return t;
}

}

#endif
