#ifndef MOUFANG_ASSOCIATORS_HPP
#define MOUFANG_ASSOCIATORS_HPP

#include <Eigen/Core>
#include <array>

#include "moufang/birep.hpp"
#include "moufang/derivatives.hpp"
#include "moufang/loop_calculus.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// Associators of an action (S, T): pointwise failures of composition,
///
///   l(A; g, h) = S_{gh} A - S_g S_h A
///   r(A; g, h) = T_{gh} A - T_h T_g A
///   m(A; g, h) = T_h S_g A - S_g T_h A
///
/// all vanishing whenever g = e or h = e.
///
/// First-order associators expand these in one slot at the unit. The
/// unhatted family differentiates the first slot, the hatted family the
/// second. Sign convention: the hatted mixed associator expands the
/// reversed difference S_g T_h A - T_h S_g A, so that the S-side chain
/// lhat = mhat = -l holds on any Moufang action (the unreversed choice
/// flips mhat's sign, which the test suite measures and reports).
template <class Act>
struct AssociatorVectors {
  using Vec = std::array<double, Act::N>;
  Vec l, r, m;
};

template <class Act>
AssociatorVectors<Act> associators(const Act& act, const std::array<double, Act::N>& A,
                                   const std::array<double, Act::R>& g,
                                   const std::array<double, Act::R>& h) {
  using Model = typename Act::Model;
  constexpr int N = Act::N;
  const auto gh = Model::mul(g, h);
  AssociatorVectors<Act> out;
  const auto l1 = act.S(gh, A);
  const auto l2 = act.S(g, act.S(h, A));
  const auto r1 = act.T(gh, A);
  const auto r2 = act.T(h, act.T(g, A));
  const auto m1 = act.T(h, act.S(g, A));
  const auto m2 = act.S(g, act.T(h, A));
  for (int i = 0; i < N; ++i) {
    out.l[i] = l1[i] - l2[i];
    out.r[i] = r1[i] - r2[i];
    out.m[i] = m1[i] - m2[i];
  }
  return out;
}

template <class Act>
struct AssociatorMatrices {
  using Mat = Eigen::Matrix<double, Act::N, Act::R>;
  Mat l, lhat, r, rhat, m, mhat;

  double max_abs_diff(const AssociatorMatrices& o) const {
    double d = 0.0;
    d = std::max(d, (l - o.l).template lpNorm<Eigen::Infinity>());
    d = std::max(d, (lhat - o.lhat).template lpNorm<Eigen::Infinity>());
    d = std::max(d, (r - o.r).template lpNorm<Eigen::Infinity>());
    d = std::max(d, (rhat - o.rhat).template lpNorm<Eigen::Infinity>());
    d = std::max(d, (m - o.m).template lpNorm<Eigen::Infinity>());
    d = std::max(d, (mhat - o.mhat).template lpNorm<Eigen::Infinity>());
    return d;
  }
};

/// S-field of the action at a point X: d(S_g X)^mu / dg^j at g = e.
template <class Act>
Eigen::Matrix<double, Act::N, Act::R> field_S(const Act& act,
                                              const std::array<double, Act::N>& X) {
  return jacobian<Act::R>(
      [&](const auto& g) { return act.S(g, lift<Act::R>(X)); },
      std::array<double, Act::R>{});
}

template <class Act>
Eigen::Matrix<double, Act::N, Act::R> field_T(const Act& act,
                                              const std::array<double, Act::N>& X) {
  return jacobian<Act::R>(
      [&](const auto& g) { return act.T(g, lift<Act::R>(X)); },
      std::array<double, Act::R>{});
}

/// Route (i): differentiate the defining associators in the expansion slot
/// at the unit, by jets. The other slot stays at the given g.
template <class Act>
AssociatorMatrices<Act> first_order_jet(const Act& act, const std::array<double, Act::N>& A,
                                        const std::array<double, Act::R>& g) {
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  const std::array<double, R> e{};
  const auto Al = lift<R>(A);
  const auto gl = lift<R>(g);
  const auto SgA = lift<R>(act.S(g, A));
  const auto TgA = lift<R>(act.T(g, A));

  AssociatorMatrices<Act> out;
  out.l = jacobian<R>(
      [&](const auto& k) { return array_sub(act.S(Model::mul(k, gl), Al), act.S(k, SgA)); }, e);
  out.lhat = jacobian<R>(
      [&](const auto& k) { return array_sub(act.S(Model::mul(gl, k), Al), act.S(gl, act.S(k, Al))); },
      e);
  out.r = jacobian<R>(
      [&](const auto& k) { return array_sub(act.T(Model::mul(k, gl), Al), act.T(gl, act.T(k, Al))); },
      e);
  out.rhat = jacobian<R>(
      [&](const auto& k) { return array_sub(act.T(Model::mul(gl, k), Al), act.T(k, TgA)); }, e);
  out.m = jacobian<R>(
      [&](const auto& k) { return array_sub(act.T(gl, act.S(k, Al)), act.S(k, TgA)); }, e);
  out.mhat = jacobian<R>(
      [&](const auto& k) { return array_sub(act.S(gl, act.T(k, Al)), act.T(k, SgA)); }, e);
  return out;
}

/// Route (ii): the closed forms in terms of u, v and the action's Taylor
/// fields, evaluated independently of route (i):
///
///   l^mu_j    = u^s_j(g) d(S_gA)^mu/dg^s - S^mu_j(S_gA)
///   lhat^mu_j = v^s_j(g) d(S_gA)^mu/dg^s - S^nu_j(A) d(S_gA)^mu/dA^nu
///   r^mu_j    = u^s_j(g) d(T_gA)^mu/dg^s - T^nu_j(A) d(T_gA)^mu/dA^nu
///   rhat^mu_j = v^s_j(g) d(T_gA)^mu/dg^s - T^mu_j(T_gA)
///   m^mu_j    = S^nu_j(A) d(T_gA)^mu/dA^nu - S^mu_j(T_gA)
///   mhat^mu_j = T^nu_j(A) d(S_gA)^mu/dA^nu - T^mu_j(S_gA)
template <class Act>
AssociatorMatrices<Act> first_order_closed(const Act& act, const std::array<double, Act::N>& A,
                                           const std::array<double, Act::R>& g) {
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  constexpr int N = Act::N;

  const auto u = LoopCalculus<Model>::aux_u(g);
  const auto v = LoopCalculus<Model>::aux_v(g);
  auto s = jet_eval2<R, N>([&](const auto& gg, const auto& X) { return act.S(gg, X); }, g, A);
  auto t = jet_eval2<R, N>([&](const auto& gg, const auto& X) { return act.T(gg, X); }, g, A);
  const Eigen::Matrix<double, N, R> dSdg = s.jacobian1;
  const Eigen::Matrix<double, N, N> dSdA = s.jacobian2;
  const Eigen::Matrix<double, N, R> dTdg = t.jacobian1;
  const Eigen::Matrix<double, N, N> dTdA = t.jacobian2;
  std::array<double, N> SgA, TgA;
  for (int i = 0; i < N; ++i) {
    SgA[i] = s.value(i);
    TgA[i] = t.value(i);
  }

  const auto Sf_A = field_S(act, A);
  const auto Tf_A = field_T(act, A);
  const auto Sf_SgA = field_S(act, SgA);
  const auto Sf_TgA = field_S(act, TgA);
  const auto Tf_SgA = field_T(act, SgA);
  const auto Tf_TgA = field_T(act, TgA);

  AssociatorMatrices<Act> out;
  out.l = dSdg * u - Sf_SgA;
  out.lhat = dSdg * v - dSdA * Sf_A;
  out.r = dTdg * u - dTdA * Tf_A;
  out.rhat = dTdg * v - Tf_TgA;
  out.m = dTdA * Sf_A - Sf_TgA;
  out.mhat = dSdA * Tf_A - Tf_SgA;
  return out;
}

/// The m and mhat closed forms admit a second reading in which the field
/// coefficient is evaluated at the transported point instead of at A. Both
/// readings are computed so tests can report which one matches route (i).
template <class Act>
struct MixedClosedFormReadings {
  using Mat = Eigen::Matrix<double, Act::N, Act::R>;
  Mat m_coeff_at_A, m_coeff_at_SgA;
  Mat mhat_coeff_at_A, mhat_coeff_at_SgA;
};

template <class Act>
MixedClosedFormReadings<Act> mixed_closed_form_readings(const Act& act,
                                                        const std::array<double, Act::N>& A,
                                                        const std::array<double, Act::R>& g) {
  constexpr int R = Act::R;
  constexpr int N = Act::N;
  auto s = jet_eval2<R, N>([&](const auto& gg, const auto& X) { return act.S(gg, X); }, g, A);
  auto t = jet_eval2<R, N>([&](const auto& gg, const auto& X) { return act.T(gg, X); }, g, A);
  const Eigen::Matrix<double, N, N> dSdA = s.jacobian2;
  const Eigen::Matrix<double, N, N> dTdA = t.jacobian2;
  std::array<double, N> SgA, TgA;
  for (int i = 0; i < N; ++i) {
    SgA[i] = s.value(i);
    TgA[i] = t.value(i);
  }
  const auto Sf_A = field_S(act, A);
  const auto Tf_A = field_T(act, A);
  const auto Sf_SgA = field_S(act, SgA);
  const auto Sf_TgA = field_S(act, TgA);
  const auto Tf_SgA = field_T(act, SgA);

  MixedClosedFormReadings<Act> out;
  out.m_coeff_at_A = dTdA * Sf_A - Sf_TgA;
  out.m_coeff_at_SgA = dTdA * Sf_SgA - Sf_TgA;
  out.mhat_coeff_at_A = dSdA * Tf_A - Tf_SgA;
  out.mhat_coeff_at_SgA = dSdA * Tf_SgA - Tf_SgA;
  return out;
}

template <class Act>
struct AssociatorTensors {
  using T3 = Tensor3<Act::N, Act::R, Act::R>;
  T3 l, lhat, r, rhat, m, mhat;
};

/// Second-order associators by differentiating the first-order families at
/// g = e; equivalently the mixed (g, h) second-derivative blocks of the
/// defining associators, which one joint jet pass per family provides.
template <class Act>
AssociatorTensors<Act> second_order_jet(const Act& act, const std::array<double, Act::N>& A) {
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  constexpr int N = Act::N;
  const std::array<double, R> e{};
  constexpr int D = 2 * R;
  const auto Al = lift<D>(A);

  const auto Ml = mixed_second<R, R>(
      [&](const auto& g, const auto& h) {
        return array_sub(act.S(Model::mul(g, h), Al), act.S(g, act.S(h, Al)));
      },
      e, e);
  const auto Mr = mixed_second<R, R>(
      [&](const auto& g, const auto& h) {
        return array_sub(act.T(Model::mul(g, h), Al), act.T(h, act.T(g, Al)));
      },
      e, e);
  const auto Mm = mixed_second<R, R>(
      [&](const auto& g, const auto& h) {
        return array_sub(act.T(h, act.S(g, Al)), act.S(g, act.T(h, Al)));
      },
      e, e);

  AssociatorTensors<Act> out;
  for (int mu = 0; mu < N; ++mu) {
    for (int j = 0; j < R; ++j) {
      for (int k = 0; k < R; ++k) {
        out.l(mu, j, k) = Ml(mu, j, k);
        out.lhat(mu, j, k) = Ml(mu, k, j);
        out.r(mu, j, k) = Mr(mu, j, k);
        out.rhat(mu, j, k) = Mr(mu, k, j);
        out.m(mu, j, k) = Mm(mu, j, k);
        out.mhat(mu, j, k) = -Mm(mu, k, j);  // hatted mixed convention
      }
    }
  }
  return out;
}

/// Closed forms for the second-order associators in terms of the Taylor
/// fields at A and the loop's a-tensor:
///
///   l^mu_jk = Stilde^mu_jk + a^s_jk S^mu_s - S^nu_k dS^mu_j/dA^nu
///   m^mu_jk = Ttilde^mu_jk + a^s_jk T^mu_s - T^nu_j dT^mu_k/dA^nu
///   r^mu_jk = S^nu_j dT^mu_k/dA^nu - T^nu_k dS^mu_j/dA^nu
template <class Act>
struct SecondOrderClosedForms {
  using T3 = Tensor3<Act::N, Act::R, Act::R>;
  T3 l_form, m_form, r_form;
};

template <class Act>
SecondOrderClosedForms<Act> second_order_closed(const Act& act,
                                                const std::array<double, Act::N>& A) {
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  constexpr int N = Act::N;
  const auto f = action_fields_at(act, A);
  const auto a = LoopCalculus<Model>::a_tensor();

  SecondOrderClosedForms<Act> out;
  for (int mu = 0; mu < N; ++mu) {
    for (int j = 0; j < R; ++j) {
      for (int k = 0; k < R; ++k) {
        double l = f.Stilde(mu, j, k);
        double m = f.Ttilde(mu, j, k);
        double r = 0.0;
        for (int s = 0; s < R; ++s) {
          l += a(s, j, k) * f.S(mu, s);
          m += a(s, j, k) * f.T(mu, s);
        }
        for (int nu = 0; nu < N; ++nu) {
          l -= f.S(nu, k) * f.dSdA(mu, j, nu);
          m -= f.T(nu, j) * f.dTdA(mu, k, nu);
          r += f.S(nu, j) * f.dTdA(mu, k, nu) - f.T(nu, k) * f.dSdA(mu, j, nu);
        }
        out.l_form(mu, j, k) = l;
        out.m_form(mu, j, k) = m;
        out.r_form(mu, j, k) = r;
      }
    }
  }
  return out;
}

/// The pairings tying the six tensors together:
/// l_jk = mhat_kj, m_jk = rhat_kj, r_jk = -mhat_kj.
template <class Act>
struct PairingResiduals {
  double l_vs_mhat = 0.0;
  double m_vs_rhat = 0.0;
  double r_vs_mhat = 0.0;
};

template <class Act>
PairingResiduals<Act> pairing_residuals(const AssociatorTensors<Act>& t) {
  PairingResiduals<Act> p;
  for (int mu = 0; mu < Act::N; ++mu) {
    for (int j = 0; j < Act::R; ++j) {
      for (int k = 0; k < Act::R; ++k) {
        p.l_vs_mhat = std::max(p.l_vs_mhat, std::abs(t.l(mu, j, k) - t.mhat(mu, k, j)));
        p.m_vs_rhat = std::max(p.m_vs_rhat, std::abs(t.m(mu, j, k) - t.rhat(mu, k, j)));
        p.r_vs_mhat = std::max(p.r_vs_mhat, std::abs(t.r(mu, j, k) + t.mhat(mu, k, j)));
      }
    }
  }
  return p;
}

}

#endif
