#ifndef MOUFANG_SUITES_HPP
#define MOUFANG_SUITES_HPP

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moufang/associators.hpp"
#include "moufang/birep.hpp"
#include "moufang/finite_diff.hpp"
#include "moufang/finite_loop.hpp"
#include "moufang/loop_calculus.hpp"
#include "moufang/loop_identities.hpp"
#include "moufang/loop_models.hpp"
#include "moufang/maurer_cartan.hpp"
#include "moufang/minimality.hpp"
#include "moufang/report.hpp"

namespace moufang {

inline const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"octonion", "quaternion", "chein-s3"};
  return names;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"loop-axioms", "tangent",    "birep",
                                              "associators", "minimality", "gle",
                                              "maurer-cartan", "all"};
  return names;
}

/// Every identity name any suite can emit; tolerance overrides are validated
/// against this list.
inline const std::set<std::string>& known_identity_names() {
  static const std::set<std::string> names{
      "left-alternative", "right-alternative", "flexibility", "moufang",
      "inverse-two-sided", "norm-multiplicative", "associativity",
      "quasigroup", "unit-law", "moufang-exhaustive", "nonassociativity-witness",
      "c-antisymmetry", "maltsev-quartic", "maltsev-concise", "jacobi-identity",
      "jacobiator-nonzero", "uv-fd-agreement",
      "birep-identity", "birep-composition-1", "birep-composition-2", "birep-rewritten-1", "birep-rewritten-2",
      "assoc-SS", "assoc-TT", "assoc-ST", "staylor-symmetry", "field-sum-STP",
      "field-sum-uvw", "fields-match-uv",
      "assoc-vanish-at-e", "routes-first-order", "closed-form-l2", "closed-form-m2",
      "closed-form-r2", "pairing-l-mhat", "pairing-m-rhat", "pairing-r-mhat",
      "assoc-all-vanish",
      "min1-lhat-eq-mhat", "min1-mhat-eq-neg-l", "min1-m-eq-r",
      "min1-rhat-eq-neg-m", "min2-lhat-eq-r", "min2-r-eq-m", "min2-m-antisym",
      "stilde-symmetrized", "ttilde-symmetrized",
      "gle-S-a", "gle-S-b", "gle-S-c", "gle-T-a", "gle-T-b", "gle-T-c",
      "gle-S-dependence", "gle-T-dependence", "classical-lie-S", "classical-lie-T",
      "maurer-cartan-S", "maurer-cartan-T", "commutation-SS", "commutation-TT", "commutation-cross",
      "forms-agree-S", "forms-agree-T", "scale-quadratic",
      "classical-mc-S", "classical-mc-cross"};
  return names;
}

/// Tangent-algebra suite: structure constants, Mal'tsev identities in both
/// the quartic and Sagle forms, the Jacobi or Jacobiator check appropriate
/// to the model, and the jet-vs-finite-difference cross check on u and v.
template <class Model>
std::vector<ResidualRecord> tangent_suite(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  constexpr int R = Model::dim;
  using Vec = Eigen::Matrix<double, R, 1>;

  const auto alg = tangent_algebra<Model>();
  std::vector<ResidualRecord> out;
  out.push_back(ResidualRecord::make("c-antisymmetry", alg.antisymmetry_defect(), 0.0,
                                     static_cast<std::int64_t>(R) * R * R));

  ResidualAccumulator quartic("maltsev-quartic", 1e-8);
  ResidualAccumulator concise("maltsev-concise", 1e-8);
  ResidualAccumulator jacobi("jacobi-identity", 1e-10);
  SampleRng rng = SampleRng(seed).derive("tangent");
  for (int i = 0; i < samples; ++i) {
    Vec x, y, z;
    const auto xs = rng.unit_sphere<R>();
    const auto ys = rng.unit_sphere<R>();
    const auto zs = rng.unit_sphere<R>();
    for (int j = 0; j < R; ++j) {
      x(j) = xs[j];
      y(j) = ys[j];
      z(j) = zs[j];
    }
    quartic.observe(alg.maltsev_residual_quartic(x, y, z).template lpNorm<Eigen::Infinity>());
    concise.observe(alg.maltsev_residual_concise(x, y, z).template lpNorm<Eigen::Infinity>());
    if (Model::associative) {
      jacobi.observe(alg.jacobiator(x, y, z).template lpNorm<Eigen::Infinity>());
    }
  }
  out.push_back(quartic.finish());
  out.push_back(concise.finish());
  if (Model::associative) {
    out.push_back(jacobi.finish());
  } else {
    // the tangent algebra must fail Jacobi somewhere: scan all basis triples
    double max_j = 0.0;
    std::int64_t count = 0;
    for (int i = 0; i < R; ++i)
      for (int j = i + 1; j < R; ++j)
        for (int k = j + 1; k < R; ++k) {
          Vec x = Vec::Zero(), y = Vec::Zero(), z = Vec::Zero();
          x(i) = y(j) = z(k) = 1.0;
          max_j = std::max(max_j, alg.jacobiator(x, y, z).template lpNorm<Eigen::Infinity>());
          ++count;
        }
    const double deficiency = std::max(0.0, 0.5 - max_j);
    out.push_back(ResidualRecord::make("jacobiator-nonzero", deficiency, 0.0, count));
  }

  ResidualAccumulator uv_fd("uv-fd-agreement", 1e-6);
  const int fd_samples = std::min(samples, 50);
  for (int i = 0; i < fd_samples; ++i) {
    const auto g = rng.ball<R>(Model::sample_radius);
    const auto u = LoopCalculus<Model>::aux_u(g);
    const auto v = LoopCalculus<Model>::aux_v(g);
    const auto u_fd = fd_jacobian<R>(
        [&](const std::array<double, R>& k) { return Model::mul(k, g); },
        std::array<double, R>{});
    const auto v_fd = fd_jacobian<R>(
        [&](const std::array<double, R>& k) { return Model::mul(g, k); },
        std::array<double, R>{});
    uv_fd.observe((u - u_fd).template lpNorm<Eigen::Infinity>());
    uv_fd.observe((v - v_fd).template lpNorm<Eigen::Infinity>());
  }
  out.push_back(uv_fd.finish());
  return out;
}

/// Birepresentation suite on the regular action: defining relations plus
/// the structural facts about the Taylor fields.
template <class Model>
std::vector<ResidualRecord> birep_suite(int samples, std::uint64_t seed) {
  RegularBirep<Model> act;
  constexpr int R = Model::dim;
  constexpr int N = R;
  auto out = defining_relations_residual(act, samples, seed);

  ResidualAccumulator symm("staylor-symmetry", 1e-10);
  ResidualAccumulator sum_stp("field-sum-STP", 0.0);
  ResidualAccumulator sum_uvw("field-sum-uvw", 0.0);
  ResidualAccumulator match_uv("fields-match-uv", 1e-12);
  SampleRng rng = SampleRng(seed).derive("birep-fields");
  const int field_samples = std::min(samples, 50);
  for (int i = 0; i < field_samples; ++i) {
    const auto A = rng.ball<N>(Model::sample_radius);
    const auto f = action_fields_at(act, A);
    symm.observe((f.Stilde - transpose_last(f.Stilde)).max_abs());
    symm.observe((f.Ttilde - transpose_last(f.Ttilde)).max_abs());
    sum_stp.observe((f.S + f.T + f.P).template lpNorm<Eigen::Infinity>());
    const auto g = rng.ball<R>(Model::sample_radius);
    const auto u = LoopCalculus<Model>::aux_u(g);
    const auto v = LoopCalculus<Model>::aux_v(g);
    const auto w = LoopCalculus<Model>::aux_w(g);
    sum_uvw.observe((u + v + w).template lpNorm<Eigen::Infinity>());
    // on the regular action the S and T fields are the loop's own u and v
    match_uv.observe((f.S - LoopCalculus<Model>::aux_u(A)).template lpNorm<Eigen::Infinity>());
    match_uv.observe((f.T - LoopCalculus<Model>::aux_v(A)).template lpNorm<Eigen::Infinity>());
  }
  out.push_back(symm.finish());
  out.push_back(sum_stp.finish());
  out.push_back(sum_uvw.finish());
  out.push_back(match_uv.finish());
  return out;
}

/// Associator suite: initial conditions, the two computation routes for the
/// first-order families, the second-order closed forms and pairings, and the
/// all-vanish control on an associative model.
template <class Model>
std::vector<ResidualRecord> associators_suite(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  RegularBirep<Model> act;
  constexpr int R = Model::dim;
  constexpr int N = R;

  ResidualAccumulator vanish("assoc-vanish-at-e", 1e-12);
  ResidualAccumulator routes("routes-first-order", 1e-8);
  ResidualAccumulator cf_l("closed-form-l2", 1e-6), cf_m("closed-form-m2", 1e-6), cf_r("closed-form-r2", 1e-6);
  ResidualAccumulator p_l("pairing-l-mhat", 1e-6), p_m("pairing-m-rhat", 1e-6),
      p_r("pairing-r-mhat", 1e-6);
  ResidualAccumulator all_vanish("assoc-all-vanish", 1e-10);

  SampleRng rng = SampleRng(seed).derive("associators");
  const std::array<double, R> e{};
  for (int i = 0; i < samples; ++i) {
    detail::resample_on_chart_exit([&] {
      const auto A = rng.ball<N>(Model::sample_radius);
      const auto g = rng.ball<R>(Model::sample_radius);
      const auto h = rng.ball<R>(Model::sample_radius);

      const auto at_e1 = associators(act, A, e, h);
      const auto at_e2 = associators(act, A, g, e);
      for (int c = 0; c < N; ++c) {
        vanish.observe(std::abs(at_e1.l[c]));
        vanish.observe(std::abs(at_e1.r[c]));
        vanish.observe(std::abs(at_e1.m[c]));
        vanish.observe(std::abs(at_e2.l[c]));
        vanish.observe(std::abs(at_e2.r[c]));
        vanish.observe(std::abs(at_e2.m[c]));
      }

      const auto fo_jet = first_order_jet(act, A, g);
      const auto fo_closed = first_order_closed(act, A, g);
      routes.observe(fo_jet.max_abs_diff(fo_closed));

      if (Model::associative) {
        const auto abc = associators(act, A, g, h);
        for (int c = 0; c < N; ++c) {
          all_vanish.observe(std::abs(abc.l[c]));
          all_vanish.observe(std::abs(abc.r[c]));
          all_vanish.observe(std::abs(abc.m[c]));
        }
        all_vanish.observe(fo_jet.l.template lpNorm<Eigen::Infinity>());
        all_vanish.observe(fo_jet.lhat.template lpNorm<Eigen::Infinity>());
        all_vanish.observe(fo_jet.r.template lpNorm<Eigen::Infinity>());
        all_vanish.observe(fo_jet.rhat.template lpNorm<Eigen::Infinity>());
        all_vanish.observe(fo_jet.m.template lpNorm<Eigen::Infinity>());
        all_vanish.observe(fo_jet.mhat.template lpNorm<Eigen::Infinity>());
      }
      return 0;
    });
  }

  const int tensor_samples = std::min(samples, 30);
  for (int i = 0; i < tensor_samples; ++i) {
    const auto A = rng.ball<N>(Model::sample_radius);
    const auto so = second_order_jet(act, A);
    const auto cf = second_order_closed(act, A);
    cf_l.observe((so.l - cf.l_form).max_abs());
    cf_m.observe((so.m - cf.m_form).max_abs());
    cf_r.observe((so.r - cf.r_form).max_abs());
    const auto pr = pairing_residuals(so);
    p_l.observe(pr.l_vs_mhat);
    p_m.observe(pr.m_vs_rhat);
    p_r.observe(pr.r_vs_mhat);
    if (Model::associative) {
      all_vanish.observe(so.l.max_abs());
      all_vanish.observe(so.r.max_abs());
      all_vanish.observe(so.m.max_abs());
    }
  }

  std::vector<ResidualRecord> out{vanish.finish(), routes.finish(), cf_l.finish(),
                                  cf_m.finish(),    cf_r.finish(),    p_l.finish(),
                                  p_m.finish(),    p_r.finish()};
  if (Model::associative) out.push_back(all_vanish.finish());
  return out;
}

namespace detail {

template <class Model>
std::vector<ResidualRecord> run_model_suite(const std::string& suite, int samples,
                                            std::uint64_t seed) {
  RegularBirep<Model> act;
  if (suite == "loop-axioms") return identity_suite<Model>(samples, seed);
  if (suite == "tangent") return tangent_suite<Model>(samples, seed);
  if (suite == "birep") return birep_suite<Model>(samples, seed);
  if (suite == "associators") return associators_suite<Model>(samples, seed);
  if (suite == "minimality") {
    auto out = minimality_first_order(act, samples, seed);
    const auto second = second_order_minimality(act, std::min(samples, 30), seed);
    out.insert(out.end(), second.begin(), second.end());
    return out;
  }
  if (suite == "gle") return gle_residuals(act, samples, seed);
  if (suite == "maurer-cartan") return gmc_residuals(act, samples, seed);
  if (suite == "all") {
    std::vector<ResidualRecord> out;
    for (const char* s : {"loop-axioms", "tangent", "birep", "associators", "minimality",
                          "gle", "maurer-cartan"}) {
      const auto part = run_model_suite<Model>(s, samples, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace detail

/// Runs the configured campaign. Deterministic given (model, suite, samples,
/// seed). Throws std::invalid_argument for unknown names or incompatible
/// model/suite combinations.
inline VerificationReport run_suite(const SuiteConfig& cfg) {
  if (std::find(model_names().begin(), model_names().end(), cfg.model) == model_names().end()) {
    throw std::invalid_argument("unknown model: " + cfg.model);
  }
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite: " + cfg.suite);
  }
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  for (const auto& [name, tol] : cfg.tol_overrides) {
    if (!known_identity_names().count(name)) {
      throw std::invalid_argument("unknown identity in tolerance override: " + name);
    }
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance override must be >= 0");
  }

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.model = cfg.model;
  report.suite = cfg.suite;
  report.seed = cfg.seed;
  report.samples = cfg.samples;

  if (cfg.model == "chein-s3") {
    if (cfg.suite != "loop-axioms" && cfg.suite != "all") {
      throw std::invalid_argument("model chein-s3 supports only the loop-axioms suite");
    }
    report.records = finite_loop_suite(chein_double(symmetric_group_s3()),
                                       /*expect_nonassociative=*/true);
  } else if (cfg.model == "octonion") {
    report.records = detail::run_model_suite<OctonionLoop>(cfg.suite, cfg.samples, cfg.seed);
  } else {
    report.records = detail::run_model_suite<QuaternionLoop>(cfg.suite, cfg.samples, cfg.seed);
  }

  for (auto& rec : report.records) {
    const auto it = cfg.tol_overrides.find(rec.name);
    if (it != cfg.tol_overrides.end()) {
      rec.tolerance = it->second;
      rec.pass = rec.max_residual <= rec.tolerance;
    }
  }
  report.pass = all_pass(report.records);
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

namespace detail {

template <class Model>
std::string tangent_summary_for() {
  constexpr int R = Model::dim;
  std::ostringstream os;
  const auto c = LoopCalculus<Model>::c_tensor();
  os << "model " << Model::name() << "  (chart dimension " << R << ")\n\n";
  os << "structure constants, nonzero c^i_jk (bracket [x,y]^i = c^i_jk x^j y^k):\n";
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      for (int k = 0; k < R; ++k)
        if (std::abs(c(i, j, k)) > 1e-12) {
          os << "  c^" << i + 1 << "_" << j + 1 << "," << k + 1 << " = " << c(i, j, k) << "\n";
        }
  const auto records = tangent_suite<Model>(100, 0);
  os << "\ntangent-algebra checks (100 samples, seed 0):\n";
  for (const auto& r : records) {
    os << "  " << r.name << ": max residual " << r.max_residual << " vs tolerance "
       << r.tolerance << " -> " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

}  // namespace detail

inline std::string tangent_summary(const std::string& model) {
  if (model == "octonion") return detail::tangent_summary_for<OctonionLoop>();
  if (model == "quaternion") return detail::tangent_summary_for<QuaternionLoop>();
  throw std::invalid_argument("tangent summary requires a chart model (octonion or quaternion)");
}

}

#endif
