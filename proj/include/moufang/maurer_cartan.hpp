#ifndef MOUFANG_MAURER_CARTAN_HPP
#define MOUFANG_MAURER_CARTAN_HPP

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "moufang/associators.hpp"
#include "moufang/birep.hpp"
#include "moufang/finite_diff.hpp"
#include "moufang/loop_calculus.hpp"
#include "moufang/residual.hpp"
#include "moufang/sampling.hpp"

namespace moufang {

/// A vector field on the action space, given by its value and Jacobian maps.
template <int N>
struct VectorField {
  using Vec = Eigen::Matrix<double, N, 1>;
  using Mat = Eigen::Matrix<double, N, N>;
  std::function<Vec(const std::array<double, N>&)> evaluate;
  std::function<Mat(const std::array<double, N>&)> jacobian_at;
};

enum class FieldKind { S, T };

/// Infinitesimal transformation attached to a tangent vector x:
/// A |-> x^j S^mu_j(A) (or the T family). Linear in x.
template <class Act>
VectorField<Act::N> infinitesimal_op(const Act& act, const Eigen::Matrix<double, Act::R, 1>& x,
                                     FieldKind which) {
  constexpr int N = Act::N;
  constexpr int R = Act::R;
  VectorField<N> f;
  f.evaluate = [&act, x, which](const std::array<double, N>& A) ->
      typename VectorField<N>::Vec {
        const auto m = (which == FieldKind::S) ? field_S(act, A) : field_T(act, A);
        return m * x;
      };
  f.jacobian_at = [&act, x, which](const std::array<double, N>& A) ->
      typename VectorField<N>::Mat {
        const auto fields = action_fields_at(act, A);
        const auto& t = (which == FieldKind::S) ? fields.dSdA : fields.dTdA;
        typename VectorField<N>::Mat jac = VectorField<N>::Mat::Zero();
        for (int mu = 0; mu < N; ++mu)
          for (int nu = 0; nu < N; ++nu)
            for (int j = 0; j < R; ++j) jac(mu, nu) += x(j) * t(mu, j, nu);
        return jac;
      };
  return f;
}

/// Commutator of vector fields, oriented as
///
///   [V, W](A) = J_V(A) W(A) - J_W(A) V(A),
///
/// the orientation under which [S_x, S_y] = S_[x,y] on an associative model
/// with the bracket [x,y]^i = c^i_jk x^j y^k.
template <int N>
VectorField<N> vf_commutator(const VectorField<N>& V, const VectorField<N>& W) {
  VectorField<N> f;
  f.evaluate = [V, W](const std::array<double, N>& A) -> typename VectorField<N>::Vec {
    return V.jacobian_at(A) * W.evaluate(A) - W.jacobian_at(A) * V.evaluate(A);
  };
  // Jacobian by central differences; an exact version would need third
  // derivatives of the action.
  f.jacobian_at = [V, W](const std::array<double, N>& A) -> typename VectorField<N>::Mat {
    const double h = 1e-5;
    typename VectorField<N>::Mat jac;
    for (int nu = 0; nu < N; ++nu) {
      std::array<double, N> p = A, m = A;
      p[nu] += h;
      m[nu] -= h;
      const auto vp = V.jacobian_at(p) * W.evaluate(p) - W.jacobian_at(p) * V.evaluate(p);
      const auto vm = V.jacobian_at(m) * W.evaluate(m) - W.jacobian_at(m) * V.evaluate(m);
      jac.col(nu) = (vp - vm) / (2.0 * h);
    }
    return jac;
  };
  return f;
}

namespace detail {

/// Per-point field data used by the commutation checks: values and
/// A-Jacobians of S_x, T_y style fields, all from one Taylor pass.
template <class Act>
struct OperatorData {
  static constexpr int N = Act::N;
  using Vec = Eigen::Matrix<double, N, 1>;
  using Mat = Eigen::Matrix<double, N, N>;
  Vec Sx, Sy, Tx, Ty;
  Mat JSx, JSy, JTx, JTy;
  Eigen::Matrix<double, N, Act::R> Sf, Tf;

  static Mat contract(const Tensor3<N, Act::R, N>& t,
                      const Eigen::Matrix<double, Act::R, 1>& x) {
    Mat m = Mat::Zero();
    for (int mu = 0; mu < N; ++mu)
      for (int nu = 0; nu < N; ++nu)
        for (int j = 0; j < Act::R; ++j) m(mu, nu) += x(j) * t(mu, j, nu);
    return m;
  }

  OperatorData(const ActionFields<Act>& f, const Eigen::Matrix<double, Act::R, 1>& x,
               const Eigen::Matrix<double, Act::R, 1>& y) {
    Sf = f.S;
    Tf = f.T;
    Sx = f.S * x;
    Sy = f.S * y;
    Tx = f.T * x;
    Ty = f.T * y;
    JSx = contract(f.dSdA, x);
    JSy = contract(f.dSdA, y);
    JTx = contract(f.dTdA, x);
    JTy = contract(f.dTdA, y);
  }

  Vec comm(const Mat& JV, const Vec& Wv, const Mat& JW, const Vec& Vv) const {
    return JV * Wv - JW * Vv;
  }
};

}  // namespace detail

/// Commutation relations of the infinitesimal transformations, in both the
/// coordinate form
///
///   S^nu_k dS^mu_j/dA^nu - S^nu_j dS^mu_k/dA^nu
///       = c^s_jk S^mu_s + 2 (T^nu_j dS^mu_k/dA^nu - S^nu_k dT^mu_j/dA^nu)
///   T^nu_k dT^mu_j/dA^nu - T^nu_j dT^mu_k/dA^nu
///       = c^s_kj T^mu_s + 2 (S^nu_j dT^mu_k/dA^nu - T^nu_k dS^mu_j/dA^nu)
///
/// and the operator form
///
///   [S_x, S_y] = S_[x,y] - 2 [S_x, T_y]
///   [T_x, T_y] = T_[y,x] - 2 [T_x, S_y]
///   [S_x, T_y] = [T_x, S_y]
///
/// plus the pointwise agreement of the two forms and the quadratic scaling
/// of every bilinear combination in (x, y).
template <class Act>
std::vector<ResidualRecord> gmc_residuals(const Act& act, int samples, std::uint64_t seed,
                                          double radius = Act::Model::sample_radius) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  constexpr int N = Act::N;
  using Vec = Eigen::Matrix<double, N, 1>;
  using TVec = Eigen::Matrix<double, R, 1>;

  const auto c = LoopCalculus<Model>::c_tensor();
  MaltsevAlgebra<R> alg(c);

  ResidualAccumulator coord_s("maurer-cartan-S", 1e-6), coord_t("maurer-cartan-T", 1e-6);
  ResidualAccumulator op_ss("commutation-SS", 1e-6), op_tt("commutation-TT", 1e-6), op_cross("commutation-cross", 1e-6);
  ResidualAccumulator agree_s("forms-agree-S", 1e-8), agree_t("forms-agree-T", 1e-8);
  ResidualAccumulator scale("scale-quadratic", 1e-10);
  ResidualAccumulator cl_s("classical-mc-S", 1e-8), cl_cross("classical-mc-cross", 1e-10);

  SampleRng rng = SampleRng(seed).derive("maurer-cartan");
  for (int i = 0; i < samples; ++i) {
    const auto A = rng.ball<N>(radius);
    TVec x, y;
    {
      const auto xs = rng.unit_sphere<R>();
      const auto ys = rng.unit_sphere<R>();
      for (int j = 0; j < R; ++j) {
        x(j) = xs[j];
        y(j) = ys[j];
      }
    }
    const auto f = action_fields_at(act, A);

    // coordinate-form residual tensors at A
    Tensor3<N, R, R> res_coord_s, res_coord_t;
    for (int mu = 0; mu < N; ++mu) {
      for (int j = 0; j < R; ++j) {
        for (int k = 0; k < R; ++k) {
          double lhs_s = 0.0, rhs_s = 0.0, lhs_t = 0.0, rhs_t = 0.0;
          for (int nu = 0; nu < N; ++nu) {
            lhs_s += f.S(nu, k) * f.dSdA(mu, j, nu) - f.S(nu, j) * f.dSdA(mu, k, nu);
            rhs_s += 2.0 * (f.T(nu, j) * f.dSdA(mu, k, nu) - f.S(nu, k) * f.dTdA(mu, j, nu));
            lhs_t += f.T(nu, k) * f.dTdA(mu, j, nu) - f.T(nu, j) * f.dTdA(mu, k, nu);
            rhs_t += 2.0 * (f.S(nu, j) * f.dTdA(mu, k, nu) - f.T(nu, k) * f.dSdA(mu, j, nu));
          }
          for (int s = 0; s < R; ++s) {
            rhs_s += c(s, j, k) * f.S(mu, s);
            rhs_t += c(s, k, j) * f.T(mu, s);
          }
          res_coord_s(mu, j, k) = lhs_s - rhs_s;
          res_coord_t(mu, j, k) = lhs_t - rhs_t;
        }
      }
    }
    coord_s.observe(res_coord_s.max_abs());
    coord_t.observe(res_coord_t.max_abs());

    // operator form at (x, y, A)
    const detail::OperatorData<Act> op(f, x, y);
    const Vec sxy = op.Sf * alg.bracket(x, y);
    const Vec tyx = op.Tf * alg.bracket(y, x);
    const Vec comm_ss = op.comm(op.JSx, op.Sy, op.JSy, op.Sx);
    const Vec comm_tt = op.comm(op.JTx, op.Ty, op.JTy, op.Tx);
    const Vec comm_st = op.comm(op.JSx, op.Ty, op.JTy, op.Sx);
    const Vec comm_ts = op.comm(op.JTx, op.Sy, op.JSy, op.Tx);
    const Vec res_ss = comm_ss - sxy + 2.0 * comm_st;
    const Vec res_tt = comm_tt - tyx + 2.0 * comm_ts;
    op_ss.observe(res_ss.template lpNorm<Eigen::Infinity>());
    op_tt.observe(res_tt.template lpNorm<Eigen::Infinity>());
    op_cross.observe((comm_st - comm_ts).template lpNorm<Eigen::Infinity>());

    // the coordinate residual contracted with (x, y) against the operator one
    Vec coord_res_s = Vec::Zero(), coord_res_t = Vec::Zero();
    for (int mu = 0; mu < N; ++mu) {
      for (int j = 0; j < R; ++j) {
        for (int k = 0; k < R; ++k) {
          coord_res_s(mu) += x(j) * y(k) * res_coord_s(mu, j, k);
          coord_res_t(mu) += x(j) * y(k) * res_coord_t(mu, j, k);
        }
      }
    }
    agree_s.observe((coord_res_s - res_ss).template lpNorm<Eigen::Infinity>());
    agree_t.observe((coord_res_t - res_tt).template lpNorm<Eigen::Infinity>());

    // bilinearity: doubling x and y quadruples every bilinear combination
    const detail::OperatorData<Act> op2(f, (2.0 * x).eval(), (2.0 * y).eval());
    const Vec comm_ss2 = op2.comm(op2.JSx, op2.Sy, op2.JSy, op2.Sx);
    const Vec comm_st2 = op2.comm(op2.JSx, op2.Ty, op2.JTy, op2.Sx);
    const Vec sxy2 = op.Sf * alg.bracket((2.0 * x).eval(), (2.0 * y).eval());
    scale.observe((comm_ss2 - 4.0 * comm_ss).template lpNorm<Eigen::Infinity>());
    scale.observe((comm_st2 - 4.0 * comm_st).template lpNorm<Eigen::Infinity>());
    scale.observe((sxy2 - 4.0 * sxy).template lpNorm<Eigen::Infinity>());

    if (Model::associative) {
      cl_s.observe((comm_ss - sxy).template lpNorm<Eigen::Infinity>());
      cl_cross.observe(comm_st.template lpNorm<Eigen::Infinity>());
    }
  }

  std::vector<ResidualRecord> out{coord_s.finish(), coord_t.finish(), op_ss.finish(),
                                  op_tt.finish(),   op_cross.finish(), agree_s.finish(),
                                  agree_t.finish(), scale.finish()};
  if (Model::associative) {
    out.push_back(cl_s.finish());
    out.push_back(cl_cross.finish());
  }
  return out;
}

}

#endif
