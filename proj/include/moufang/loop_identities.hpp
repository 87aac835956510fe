#ifndef MOUFANG_LOOP_IDENTITIES_HPP
#define MOUFANG_LOOP_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "moufang/birep.hpp"
#include "moufang/cayley_dickson.hpp"
#include "moufang/finite_loop.hpp"
#include "moufang/residual.hpp"
#include "moufang/sampling.hpp"

namespace moufang {

/// Sampled residuals of the loop identities on a chart model:
/// left/right alternativity, flexibility, the Moufang identity, two-sided
/// inverses, and norm multiplicativity of the underlying algebra. An
/// associative model is additionally checked for full associativity.
template <class Model>
std::vector<ResidualRecord> identity_suite(int samples, std::uint64_t seed,
                                           double radius = Model::sample_radius) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  constexpr int R = Model::dim;
  constexpr int N = R + 1;

  ResidualAccumulator left_alt("left-alternative", 1e-12);
  ResidualAccumulator right_alt("right-alternative", 1e-12);
  ResidualAccumulator flex("flexibility", 1e-12);
  ResidualAccumulator moufang("moufang", 1e-12);
  ResidualAccumulator inverse("inverse-two-sided", 1e-13);
  ResidualAccumulator norm_mult("norm-multiplicative", 1e-13);
  ResidualAccumulator assoc("associativity", 1e-12);

  SampleRng rng = SampleRng(seed).derive("loop-axioms");
  const std::array<double, R> e{};
  for (int i = 0; i < samples; ++i) {
    detail::resample_on_chart_exit([&] {
      const auto g = rng.ball<R>(radius);
      const auto h = rng.ball<R>(radius);
      const auto k = rng.ball<R>(radius);

      const auto gg = Model::mul(g, g);
      const auto gh = Model::mul(g, h);
      const auto hg = Model::mul(h, g);
      left_alt.observe(detail::max_abs_diff(Model::mul(g, gh), Model::mul(gg, h)));
      right_alt.observe(detail::max_abs_diff(Model::mul(hg, g), Model::mul(h, gg)));
      flex.observe(detail::max_abs_diff(Model::mul(gh, g), Model::mul(g, hg)));
      moufang.observe(detail::max_abs_diff(Model::mul(gh, Model::mul(k, g)),
                                           Model::mul(g, Model::mul(Model::mul(h, k), g))));
      const auto gi = Model::inv(g);
      inverse.observe(detail::max_abs_diff(Model::mul(gi, g), e));
      inverse.observe(detail::max_abs_diff(Model::mul(g, gi), e));
      if (Model::associative) {
        assoc.observe(detail::max_abs_diff(Model::mul(gh, k), Model::mul(g, Model::mul(h, k))));
      }

      // norm multiplicativity on general (non-unit) algebra elements
      cd::Elem<double, N> a, b;
      for (int c = 0; c < N; ++c) {
        a[c] = rng.uniform(-1.0, 1.0);
        b[c] = rng.uniform(-1.0, 1.0);
      }
      using std::sqrt;
      const double na = sqrt(cd::norm_squared<double, N>(a));
      const double nb = sqrt(cd::norm_squared<double, N>(b));
      const double nab = sqrt(cd::norm_squared<double, N>(cd::multiply<double, N>(a, b)));
      norm_mult.observe(std::abs(nab - na * nb));
      return 0;
    });
  }

  std::vector<ResidualRecord> out{left_alt.finish(), right_alt.finish(), flex.finish(),
                                  moufang.finish(), inverse.finish(), norm_mult.finish()};
  if (Model::associative) out.push_back(assoc.finish());
  return out;
}

/// Exhaustive axiom checks for a finite loop. Witness-style records store a
/// deficiency: 0.0 when the expected property was established, 1.0 when not.
inline std::vector<ResidualRecord> finite_loop_suite(const FiniteLoop& loop,
                                                     bool expect_nonassociative) {
  const std::int64_t n = loop.order;
  const std::int64_t triples = n * n * n;
  std::vector<ResidualRecord> out;
  out.push_back(ResidualRecord::make("quasigroup", loop.is_quasigroup() ? 0.0 : 1.0, 0.0, n * n));
  out.push_back(ResidualRecord::make("unit-law", loop.has_unit() ? 0.0 : 1.0, 0.0, 2 * n));
  out.push_back(
      ResidualRecord::make("moufang-exhaustive", loop.is_moufang() ? 0.0 : 1.0, 0.0, triples));

  bool inverses_ok = true;
  for (int g = 0; g < loop.order; ++g) {
    const int li = loop.left_inverse(g);
    if (li < 0 || li != loop.right_inverse(g)) inverses_ok = false;
  }
  out.push_back(ResidualRecord::make("inverse-two-sided", inverses_ok ? 0.0 : 1.0, 0.0, n));

  if (expect_nonassociative) {
    const bool witness = loop.associativity_witness().has_value();
    out.push_back(
        ResidualRecord::make("nonassociativity-witness", witness ? 0.0 : 1.0, 0.0, triples));
  }
  return out;
}

}

#endif
