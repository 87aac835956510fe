#ifndef MOUFANG_BIREP_HPP
#define MOUFANG_BIREP_HPP

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <vector>

#include "moufang/derivatives.hpp"
#include "moufang/errors.hpp"
#include "moufang/loop_calculus.hpp"
#include "moufang/residual.hpp"
#include "moufang/sampling.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// An action of a loop on a space is a pair of scalar-generic maps
/// S(g, A), T(g, A) with S_e = T_e = id, satisfying
///
///   S_g T_g S_h = S_{gh} T_g,   S_g T_g T_h = T_{hg} S_g
///
/// and the equivalent rewritten pair
///
///   S_h T_g S_g = T_g S_{hg},   T_h T_g S_g = S_g T_{gh}.
///
/// Any type exposing Model, R, N and templated S/T can be checked; the
/// checkers only evaluate and differentiate, they never look inside.
template <class Model_>
struct RegularBirep {
  using Model = Model_;
  static constexpr int R = Model::dim;
  static constexpr int N = Model::dim;  // the loop acting on itself

  template <class Scalar>
  std::array<Scalar, N> S(const std::array<Scalar, R>& g, const std::array<Scalar, N>& A) const {
    return Model::mul(g, A);  // left translation
  }

  template <class Scalar>
  std::array<Scalar, N> T(const std::array<Scalar, R>& g, const std::array<Scalar, N>& A) const {
    return Model::mul(A, g);  // right translation
  }
};

namespace detail {

template <std::size_t M>
inline double max_abs_diff(const std::array<double, M>& x, const std::array<double, M>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < M; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

/// Runs `attempt` until it stays inside the chart; counts retries.
template <class F>
auto resample_on_chart_exit(F&& attempt, int max_retries = 100) {
  int retries = 0;
  for (;;) {
    try {
      return attempt();
    } catch (const ChartDomainError&) {
      if (++retries > max_retries) {
        throw SamplingError("sampling repeatedly left the chart domain", retries);
      }
    }
  }
}

}  // namespace detail

/// First- and second-order Taylor data of an action at a point A:
///
///   (S_g A)^mu = A^mu + S^mu_j(A) g^j + 1/2 Stilde^mu_jk(A) g^j g^k + O(g^3)
///
/// S, T are the n x r coefficient matrices, P = -S - T, Stilde/Ttilde the
/// g-Hessians at g = e, and dSdA(mu, j, nu) = d S^mu_j / d A^nu. Everything
/// comes out of one joint second-order jet pass per map.
template <class Act>
struct ActionFields {
  static constexpr int R = Act::R;
  static constexpr int N = Act::N;
  using FieldMat = Eigen::Matrix<double, N, R>;

  FieldMat S, T, P;
  Tensor3<N, R, R> Stilde, Ttilde;
  Tensor3<N, R, N> dSdA, dTdA;
};

template <class Act>
ActionFields<Act> action_fields_at(const Act& act, const std::array<double, Act::N>& A) {
  constexpr int R = Act::R;
  constexpr int N = Act::N;
  const std::array<double, R> e{};
  auto s = jet_eval2<R, N>(
      [&](const auto& g, const auto& X) { return act.S(g, X); }, e, A);
  auto t = jet_eval2<R, N>(
      [&](const auto& g, const auto& X) { return act.T(g, X); }, e, A);
  ActionFields<Act> f;
  f.S = s.jacobian1;
  f.T = t.jacobian1;
  f.P = -f.S - f.T;  // zero sum exact by construction
  f.Stilde = s.hess11;
  f.Ttilde = t.hess11;
  f.dSdA = s.hess12;
  f.dTdA = t.hess12;
  return f;
}

/// Residuals of the defining relations over sampled (g, h, A). For an
/// associative model the three associativity conditions are checked too.
template <class Act>
std::vector<ResidualRecord> defining_relations_residual(const Act& act, int samples,
                                                        std::uint64_t seed,
                                                        double radius = Act::Model::sample_radius) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  using Model = typename Act::Model;
  constexpr int R = Act::R;
  constexpr int N = Act::N;

  ResidualAccumulator identity("birep-identity", 1e-12);
  ResidualAccumulator def_b("birep-composition-1", 1e-12);
  ResidualAccumulator def_c("birep-composition-2", 1e-12);
  ResidualAccumulator def2_a("birep-rewritten-1", 1e-12);
  ResidualAccumulator def2_b("birep-rewritten-2", 1e-12);
  ResidualAccumulator assoc_ss("assoc-SS", 1e-12);
  ResidualAccumulator assoc_tt("assoc-TT", 1e-12);
  ResidualAccumulator assoc_st("assoc-ST", 1e-12);

  SampleRng rng = SampleRng(seed).derive("birep-defining");
  const std::array<double, R> e{};
  for (int i = 0; i < samples; ++i) {
    detail::resample_on_chart_exit([&] {
      const auto g = rng.ball<R>(radius);
      const auto h = rng.ball<R>(radius);
      const auto A = rng.ball<N>(radius);
      const auto gh = Model::mul(g, h);
      const auto hg = Model::mul(h, g);

      identity.observe(detail::max_abs_diff(act.S(e, A), A));
      identity.observe(detail::max_abs_diff(act.T(e, A), A));
      def_b.observe(detail::max_abs_diff(act.S(g, act.T(g, act.S(h, A))),
                                         act.S(gh, act.T(g, A))));
      def_c.observe(detail::max_abs_diff(act.S(g, act.T(g, act.T(h, A))),
                                         act.T(hg, act.S(g, A))));
      def2_a.observe(detail::max_abs_diff(act.S(h, act.T(g, act.S(g, A))),
                                          act.T(g, act.S(hg, A))));
      def2_b.observe(detail::max_abs_diff(act.T(h, act.T(g, act.S(g, A))),
                                          act.S(g, act.T(gh, A))));
      if (Model::associative) {
        assoc_ss.observe(detail::max_abs_diff(act.S(g, act.S(h, A)), act.S(gh, A)));
        assoc_tt.observe(detail::max_abs_diff(act.T(g, act.T(h, A)), act.T(hg, A)));
        assoc_st.observe(detail::max_abs_diff(act.S(g, act.T(h, A)), act.T(h, act.S(g, A))));
      }
      return 0;
    });
  }

  std::vector<ResidualRecord> out{identity.finish(), def_b.finish(), def_c.finish(),
                                  def2_a.finish(), def2_b.finish()};
  if (Model::associative) {
    out.push_back(assoc_ss.finish());
    out.push_back(assoc_tt.finish());
    out.push_back(assoc_st.finish());
  }
  return out;
}

}

#endif
