#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "moufang/derivatives.hpp"
#include "moufang/finite_diff.hpp"
#include "moufang/jet.hpp"
#include "moufang/sampling.hpp"

using namespace moufang;

TEST_CASE("square function") {
  // f(x) = x^2 at 3: value 9, derivative 6, second derivative 2
  const auto r = jet_eval<1>(
      [](const std::array<Jet2<1>, 1>& x) { return std::array<Jet2<1>, 1>{x[0] * x[0]}; },
      std::array<double, 1>{3.0});
  CHECK(r.value(0) == 9.0);
  CHECK(r.jacobian(0, 0) == 6.0);
  CHECK(r.hessian[0](0, 0) == 2.0);
}

TEST_CASE("jets are exact on degree-2 polynomials") {
  SampleRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2);
    const double d = rng.uniform(-2, 2), e = rng.uniform(-2, 2), f = rng.uniform(-2, 2);
    std::array<double, 2> base{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto r = jet_eval<2>(
        [&](const std::array<Jet2<2>, 2>& x) {
          return std::array<Jet2<2>, 1>{a * x[0] * x[0] + b * x[0] * x[1] + c * x[1] * x[1] +
                                        d * x[0] + e * x[1] + f};
        },
        base);
    const double x = base[0], y = base[1];
    CHECK_THAT(r.value(0),
               Catch::Matchers::WithinAbs(a * x * x + b * x * y + c * y * y + d * x + e * y + f,
                                          1e-14));
    CHECK_THAT(r.jacobian(0, 0), Catch::Matchers::WithinAbs(2 * a * x + b * y + d, 1e-14));
    CHECK_THAT(r.jacobian(0, 1), Catch::Matchers::WithinAbs(b * x + 2 * c * y + e, 1e-14));
    CHECK_THAT(r.hessian[0](0, 0), Catch::Matchers::WithinAbs(2 * a, 1e-14));
    CHECK_THAT(r.hessian[0](0, 1), Catch::Matchers::WithinAbs(b, 1e-14));
    CHECK_THAT(r.hessian[0](1, 1), Catch::Matchers::WithinAbs(2 * c, 1e-14));
  }
}

TEST_CASE("hessian symmetry is exact by construction") {
  SampleRng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 3> base{rng.uniform(0.1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto r = jet_eval<3>(
        [](const std::array<Jet2<3>, 3>& x) {
          using std::sqrt;
          const auto s = sqrt(x[0] * x[0] + 2.0 + x[1] * x[2]);
          return std::array<Jet2<3>, 2>{s * x[1] + x[2] / (1.0 + x[0] * x[0]),
                                        reciprocal(s) - x[0] * x[1] * 0.5};
        },
        base);
    for (int m = 0; m < 2; ++m)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.hessian[m](i, j) == r.hessian[m](j, i));
  }
}

TEST_CASE("jacobian of identity and linear maps") {
  const auto id = jacobian<3>(
      [](const std::array<Jet2<3>, 3>& x) { return x; }, std::array<double, 3>{0.3, -0.1, 0.7});
  CHECK((id - Eigen::Matrix3d::Identity()).norm() == 0.0);

  Eigen::Matrix3d M;
  M << 1, 2, 3, -4, 5, 0.5, 0, 1, -2;
  const auto lin = jacobian<3>(
      [&](const std::array<Jet2<3>, 3>& x) {
        std::array<Jet2<3>, 3> out;
        for (int i = 0; i < 3; ++i) {
          out[i] = Jet2<3>(0.0);
          for (int j = 0; j < 3; ++j) out[i] = out[i] + M(i, j) * x[j];
        }
        return out;
      },
      std::array<double, 3>{1, 2, 3});
  CHECK((lin - M).norm() == 0.0);
}

TEST_CASE("mixed second derivatives") {
  SECTION("additive map has no mixed term") {
    const auto t = mixed_second<2, 2>(
        [](const auto& g, const auto& h) {
          return std::array{g[0] + h[0], g[1] + h[1]};
        },
        std::array<double, 2>{0.1, 0.2}, std::array<double, 2>{-0.3, 0.4});
    CHECK(t.max_abs() == 0.0);
  }
  SECTION("single bilinear entry") {
    const auto t = mixed_second<2, 3>(
        [](const auto& g, const auto& h) { return std::array{g[1] * h[2]}; },
        std::array<double, 2>{}, std::array<double, 3>{});
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k) CHECK(t(0, j, k) == ((j == 1 && k == 2) ? 1.0 : 0.0));
  }
}

TEST_CASE("finite-difference oracle") {
  SECTION("f(x) = x^2 at 3") {
    const auto j = fd_jacobian<1>(
        [](const std::array<double, 1>& x) { return std::array{x[0] * x[0]}; },
        std::array<double, 1>{3.0});
    CHECK_THAT(j(0, 0), Catch::Matchers::WithinAbs(6.0, 1e-9));
  }
  SECTION("zero step is rejected") {
    CHECK_THROWS_AS(fd_jacobian<1>(
                        [](const std::array<double, 1>& x) { return x; },
                        std::array<double, 1>{0.0}, FdConfig{0.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("jets agree with finite differences on a smooth composite") {
  SampleRng rng(5);
  auto f = [](const auto& x) {
    using Scalar = std::decay_t<decltype(x[0])>;
    using std::sqrt;
    const Scalar s = sqrt(1.0 + x[0] * x[0] + x[1] * x[1] * x[2] * x[2]);
    return std::array<Scalar, 2>{s / (2.0 + x[1]), (x[0] - x[2]) * s};
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 3> base{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8),
                               rng.uniform(-0.8, 0.8)};
    const auto jet = jacobian<3>(f, base);
    const auto fd = fd_jacobian<3>(f, base);
    const double scale = std::max(1e-8 / 1e-5, fd.template lpNorm<Eigen::Infinity>());
    CHECK((jet - fd).template lpNorm<Eigen::Infinity>() <= 1e-5 * scale);
  }
}
