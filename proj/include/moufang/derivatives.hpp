#ifndef MOUFANG_DERIVATIVES_HPP
#define MOUFANG_DERIVATIVES_HPP

#include <Eigen/Core>
#include <array>
#include <utility>

#include "moufang/jet.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// Lift a plain point to constant jets (no seeded directions).
template <int D, class Scalar, std::size_t M>
inline std::array<Jet2<D>, M> lift(const std::array<Scalar, M>& x) {
  std::array<Jet2<D>, M> r;
  for (std::size_t i = 0; i < M; ++i) r[i] = Jet2<D>(x[i]);
  return r;
}

template <class Scalar, std::size_t M>
inline std::array<Scalar, M> array_sub(const std::array<Scalar, M>& x,
                                       const std::array<Scalar, M>& y) {
  std::array<Scalar, M> r;
  for (std::size_t i = 0; i < M; ++i) r[i] = x[i] - y[i];
  return r;
}

/// Seed an In-dimensional point so each coordinate is one jet direction.
template <int In>
inline std::array<Jet2<In>, In> seed(const std::array<double, In>& base) {
  std::array<Jet2<In>, In> r;
  for (int i = 0; i < In; ++i) r[i] = Jet2<In>::variable(base[i], i);
  return r;
}

/// Value, Jacobian and per-component Hessians of an In -> Out map.
template <int In, int Out>
struct JetEval {
  Eigen::Matrix<double, Out, 1> value;
  Eigen::Matrix<double, Out, In> jacobian;
  std::array<Eigen::Matrix<double, In, In>, Out> hessian;
};

/// Evaluates `f` (scalar-generic callable on std::array<Scalar, In>) over
/// jets seeded at `base` and unpacks all derivative data.
template <int In, class F>
auto jet_eval(F&& f, const std::array<double, In>& base) {
  auto jets = f(seed<In>(base));
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(jets)>);
  JetEval<In, Out> r;
  for (int m = 0; m < Out; ++m) {
    r.value(m) = jets[m].a;
    r.jacobian.row(m) = jets[m].g.transpose();
    r.hessian[m] = jets[m].h;
  }
  return r;
}

template <int In, class F>
auto jacobian(F&& f, const std::array<double, In>& base) {
  return jet_eval<In>(std::forward<F>(f), base).jacobian;
}

namespace detail {

template <int In1, int In2>
inline std::pair<std::array<Jet2<In1 + In2>, In1>, std::array<Jet2<In1 + In2>, In2>>
seed_pair(const std::array<double, In1>& b1, const std::array<double, In2>& b2) {
  constexpr int D = In1 + In2;
  std::array<Jet2<D>, In1> x;
  std::array<Jet2<D>, In2> y;
  for (int i = 0; i < In1; ++i) x[i] = Jet2<D>::variable(b1[i], i);
  for (int i = 0; i < In2; ++i) y[i] = Jet2<D>::variable(b2[i], In1 + i);
  return {x, y};
}

}  // namespace detail

/// Mixed second derivative tensor of a two-argument map:
/// out(i, j, k) = d^2 f^i / d arg1^j d arg2^k, from one joint jet pass.
template <int In1, int In2, class F>
auto mixed_second(F&& f, const std::array<double, In1>& b1, const std::array<double, In2>& b2) {
  auto [x, y] = detail::seed_pair<In1, In2>(b1, b2);
  auto jets = f(x, y);
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(jets)>);
  Tensor3<Out, In1, In2> t;
  for (int m = 0; m < Out; ++m)
    for (int j = 0; j < In1; ++j)
      for (int k = 0; k < In2; ++k) t(m, j, k) = jets[m].h(j, In1 + k);
  return t;
}

/// Joint evaluation of a two-argument map: values, both Jacobians, and all
/// second-derivative blocks (arg1-arg1, arg1-arg2, arg2-arg2).
template <int In1, int In2, int Out>
struct JetEval2 {
  Eigen::Matrix<double, Out, 1> value;
  Eigen::Matrix<double, Out, In1> jacobian1;
  Eigen::Matrix<double, Out, In2> jacobian2;
  Tensor3<Out, In1, In1> hess11;
  Tensor3<Out, In1, In2> hess12;
  Tensor3<Out, In2, In2> hess22;
};

template <int In1, int In2, class F>
auto jet_eval2(F&& f, const std::array<double, In1>& b1, const std::array<double, In2>& b2) {
  auto [x, y] = detail::seed_pair<In1, In2>(b1, b2);
  auto jets = f(x, y);
  constexpr int Out = static_cast<int>(std::tuple_size_v<decltype(jets)>);
  JetEval2<In1, In2, Out> r;
  for (int m = 0; m < Out; ++m) {
    r.value(m) = jets[m].a;
    for (int j = 0; j < In1; ++j) r.jacobian1(m, j) = jets[m].g(j);
    for (int k = 0; k < In2; ++k) r.jacobian2(m, k) = jets[m].g(In1 + k);
    for (int j = 0; j < In1; ++j)
      for (int k = 0; k < In1; ++k) r.hess11(m, j, k) = jets[m].h(j, k);
    for (int j = 0; j < In1; ++j)
      for (int k = 0; k < In2; ++k) r.hess12(m, j, k) = jets[m].h(j, In1 + k);
    for (int j = 0; j < In2; ++j)
      for (int k = 0; k < In2; ++k) r.hess22(m, j, k) = jets[m].h(In1 + j, In1 + k);
  }
  return r;
}

}

#endif
