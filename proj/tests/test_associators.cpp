#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "moufang/associators.hpp"
#include "moufang/loop_models.hpp"
#include "moufang/sampling.hpp"
#include "moufang/suites.hpp"

using namespace moufang;

TEST_CASE("associators vanish when either argument is the unit") {
  RegularBirep<OctonionLoop> act;
  SampleRng rng(41);
  const std::array<double, 7> e{};
  for (int trial = 0; trial < 50; ++trial) {
    const auto A = rng.ball<7>(0.3);
    const auto g = rng.ball<7>(0.3);
    for (const auto& v : {associators(act, A, e, g), associators(act, A, g, e)}) {
      for (int i = 0; i < 7; ++i) {
        CHECK_THAT(v.l[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(v.r[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(v.m[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
      }
    }
  }
}

TEST_CASE("octonion associators are visibly nonzero away from the unit") {
  RegularBirep<OctonionLoop> act;
  SampleRng rng(42);
  double max_l = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto g = rng.unit_sphere<7>();
    auto h = rng.unit_sphere<7>();
    for (auto& c : g) c *= 0.3;
    for (auto& c : h) c *= 0.3;
    const auto A = rng.ball<7>(0.3);
    const auto v = associators(act, A, g, h);
    for (int i = 0; i < 7; ++i) max_l = std::max(max_l, std::abs(v.l[i]));
  }
  CHECK(max_l > 1e-4);
}

TEST_CASE("quaternion associators vanish identically") {
  RegularBirep<QuaternionLoop> act;
  SampleRng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto A = rng.ball<3>(0.3);
    const auto g = rng.ball<3>(0.3);
    const auto h = rng.ball<3>(0.3);
    const auto v = associators(act, A, g, h);
    for (int i = 0; i < 3; ++i) {
      CHECK_THAT(v.l[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
      CHECK_THAT(v.r[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
      CHECK_THAT(v.m[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
    const auto fo = first_order_jet(act, A, g);
    CHECK(fo.l.lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK(fo.lhat.lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK(fo.r.lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK(fo.rhat.lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK(fo.m.lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK(fo.mhat.lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("first-order associators: jet route equals closed-form route") {
  RegularBirep<OctonionLoop> act;
  SampleRng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto A = rng.ball<7>(0.3);
    const auto g = rng.ball<7>(0.3);
    const auto jet = first_order_jet(act, A, g);
    const auto closed = first_order_closed(act, A, g);
    CHECK(jet.max_abs_diff(closed) < 1e-8);
  }
}

TEST_CASE("first-order associators vanish at g = e") {
  RegularBirep<OctonionLoop> act;
  SampleRng rng(45);
  const std::array<double, 7> e{};
  for (int trial = 0; trial < 20; ++trial) {
    const auto A = rng.ball<7>(0.3);
    const auto fo = first_order_jet(act, A, e);
    CHECK(fo.l.lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(fo.lhat.lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(fo.r.lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(fo.rhat.lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(fo.m.lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(fo.mhat.lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("the mixed closed forms need the field coefficient at A, not at S_gA") {
  // Both argument readings are computed; only the at-A reading reproduces
  // the jet route. The at-S_gA reading is measurably different.
  RegularBirep<OctonionLoop> act;
  SampleRng rng(46);
  double worst_at_A_m = 0.0, worst_at_A_mhat = 0.0;
  double best_at_SgA_m = 0.0, best_at_SgA_mhat = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    auto g = rng.unit_sphere<7>();
    for (auto& c : g) c *= 0.3;
    const auto A = rng.ball<7>(0.3);
    const auto jet = first_order_jet(act, A, g);
    const auto readings = mixed_closed_form_readings(act, A, g);
    worst_at_A_m = std::max(
        worst_at_A_m, (jet.m - readings.m_coeff_at_A).lpNorm<Eigen::Infinity>());
    worst_at_A_mhat = std::max(
        worst_at_A_mhat, (jet.mhat - readings.mhat_coeff_at_A).lpNorm<Eigen::Infinity>());
    best_at_SgA_m = std::max(
        best_at_SgA_m, (jet.m - readings.m_coeff_at_SgA).lpNorm<Eigen::Infinity>());
    best_at_SgA_mhat = std::max(
        best_at_SgA_mhat, (jet.mhat - readings.mhat_coeff_at_SgA).lpNorm<Eigen::Infinity>());
  }
  CHECK(worst_at_A_m < 1e-8);
  CHECK(worst_at_A_mhat < 1e-8);
  CHECK(best_at_SgA_m > 1e-4);
  CHECK(best_at_SgA_mhat > 1e-4);
}

TEST_CASE("second-order associators") {
  RegularBirep<OctonionLoop> act;
  SampleRng rng(47);

  SECTION("closed forms match the jet tensors") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto A = rng.ball<7>(0.3);
      const auto so = second_order_jet(act, A);
      const auto cf = second_order_closed(act, A);
      CHECK((so.l - cf.l_form).max_abs() < 1e-6);
      CHECK((so.m - cf.m_form).max_abs() < 1e-6);
      CHECK((so.r - cf.r_form).max_abs() < 1e-6);
    }
  }

  SECTION("pairings hold on the octonion regular birepresentation") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto A = rng.ball<7>(0.3);
      const auto pr = pairing_residuals(second_order_jet(act, A));
      CHECK(pr.l_vs_mhat < 1e-6);
      CHECK(pr.m_vs_rhat < 1e-6);
      CHECK(pr.r_vs_mhat < 1e-6);
    }
  }

  SECTION("all second-order tensors vanish on the quaternion model") {
    RegularBirep<QuaternionLoop> qact;
    for (int trial = 0; trial < 20; ++trial) {
      const auto A = rng.ball<3>(0.3);
      const auto so = second_order_jet(qact, A);
      CHECK(so.l.max_abs() < 1e-8);
      CHECK(so.lhat.max_abs() < 1e-8);
      CHECK(so.r.max_abs() < 1e-8);
      CHECK(so.rhat.max_abs() < 1e-8);
      CHECK(so.m.max_abs() < 1e-8);
      CHECK(so.mhat.max_abs() < 1e-8);
    }
  }

  SECTION("second-order tensors are nonzero on the octonion model") {
    const auto A = rng.ball<7>(0.3);
    const auto so = second_order_jet(act, A);
    CHECK(so.l.max_abs() > 0.1);  // at A near e the scale is set by c
  }
}

TEST_CASE("associator suite passes on both models") {
  for (const auto& r : associators_suite<OctonionLoop>(60, 3)) {
    INFO("octonion " << r.name << " residual " << r.max_residual);
    CHECK(r.pass);
  }
  for (const auto& r : associators_suite<QuaternionLoop>(60, 3)) {
    INFO("quaternion " << r.name << " residual " << r.max_residual);
    CHECK(r.pass);
  }
}
