#ifndef MOUFANG_LOOP_CALCULUS_HPP
#define MOUFANG_LOOP_CALCULUS_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "moufang/derivatives.hpp"
#include "moufang/errors.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// First- and second-order Taylor data of a loop product at the unit:
///
///   (gh)^i = h^i + u^i_j(h) g^j + ...
///          = g^i + v^i_j(g) h^j + ...
///          = g^i + h^i + a^i_jk g^j h^k + ...
///
/// u and v are fields on the chart, a is the mixed second derivative at the
/// unit, and c^i_jk = a^i_jk - a^i_kj are the structure constants of the
/// tangent algebra.
template <class Model>
struct LoopCalculus {
  static constexpr int R = Model::dim;
  using Mat = Eigen::Matrix<double, R, R>;
  using Vec = Eigen::Matrix<double, R, 1>;
  using Point = std::array<double, R>;

  /// u^i_j(h) = d(gh)^i/dg^j at g = e.
  static Mat aux_u(const Point& h) {
    Mat u = jacobian<R>(
        [&](const auto& g) { return Model::mul(g, lift<R>(h)); }, Point{});
    check_invertible(u, "u");
    return u;
  }

  /// v^i_j(g) = d(gh)^i/dh^j at h = e.
  static Mat aux_v(const Point& g) {
    Mat v = jacobian<R>(
        [&](const auto& h) { return Model::mul(lift<R>(g), h); }, Point{});
    check_invertible(v, "v");
    return v;
  }

  /// w = -u - v.
  static Mat aux_w(const Point& g) { return -aux_u(g) - aux_v(g); }

  static Tensor3<R, R, R> a_tensor() {
    return mixed_second<R, R>(
        [](const auto& g, const auto& h) { return Model::mul(g, h); }, Point{}, Point{});
  }

  static Tensor3<R, R, R> c_tensor() {
    const auto a = a_tensor();
    return a - transpose_last(a);  // antisymmetry exact in floating point
  }

private:
  static void check_invertible(const Mat& m, const char* which) {
    if (std::abs(m.determinant()) < 1e-10) {
      throw ModelViolationError(std::string("auxiliary matrix ") + which + " is singular");
    }
  }
};

/// Tangent algebra at the unit: bracket from the structure constants, plus
/// the identities that certify it is a Mal'tsev algebra.
template <int R>
class MaltsevAlgebra {
public:
  using Vec = Eigen::Matrix<double, R, 1>;

  explicit MaltsevAlgebra(Tensor3<R, R, R> c) : c_(std::move(c)) {}

  static constexpr int dim = R;
  const Tensor3<R, R, R>& structure_tensor() const { return c_; }

  /// [x, y]^i = c^i_jk x^j y^k.
  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r = Vec::Zero();
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < R; ++j)
        for (int k = 0; k < R; ++k) r(i) += c_(i, j, k) * x(j) * y(k);
    return r;
  }

  /// J(x,y,z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
  Vec jacobiator(const Vec& x, const Vec& y, const Vec& z) const {
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
  }

  /// Sagle form: [J(x,y,z), x] - J(x,y,[x,z]); zero for a Mal'tsev algebra.
  Vec maltsev_residual_concise(const Vec& x, const Vec& y, const Vec& z) const {
    return bracket(jacobiator(x, y, z), x) - jacobiator(x, y, bracket(x, z));
  }

  /// Quartic form: [[x,y],[z,x]] + [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y].
  Vec maltsev_residual_quartic(const Vec& x, const Vec& y, const Vec& z) const {
    const Vec xy = bracket(x, y);
    const Vec yz = bracket(y, z);
    const Vec zx = bracket(z, x);
    return bracket(xy, zx) + bracket(bracket(xy, z), x) + bracket(bracket(yz, x), x) +
           bracket(bracket(zx, x), y);
  }

  /// Max |c^i_jk + c^i_kj|; exactly zero by construction.
  double antisymmetry_defect() const {
    double m = 0.0;
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < R; ++j)
        for (int k = 0; k < R; ++k)
          m = std::max(m, std::abs(c_(i, j, k) + c_(i, k, j)));
    return m;
  }

private:
  Tensor3<R, R, R> c_;
};

template <class Model>
MaltsevAlgebra<Model::dim> tangent_algebra() {
  return MaltsevAlgebra<Model::dim>(LoopCalculus<Model>::c_tensor());
}

}

#endif
