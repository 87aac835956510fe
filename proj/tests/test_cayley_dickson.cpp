#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "moufang/cayley_dickson.hpp"
#include "moufang/sampling.hpp"

using namespace moufang;

namespace {

// Independent oracle: quaternion arithmetic from the hand-written i,j,k
// table, doubled once by the (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))
// rule. Shares no code with cd::multiply.
using Quat = std::array<double, 4>;

Quat quat_mul(const Quat& x, const Quat& y) {
  // basis order 1, i, j, k with ij = k, jk = i, ki = j
  return Quat{
      x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
      x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
      x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
      x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
  };
}

Quat quat_conj(const Quat& x) { return Quat{x[0], -x[1], -x[2], -x[3]}; }

std::array<double, 8> oracle_oct_mul(const std::array<double, 8>& x,
                                     const std::array<double, 8>& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  Quat lo, hi;
  const Quat ac = quat_mul(a, c), db = quat_mul(quat_conj(d), b);
  const Quat da = quat_mul(d, a), bc = quat_mul(b, quat_conj(c));
  for (int i = 0; i < 4; ++i) {
    lo[i] = ac[i] - db[i];
    hi[i] = da[i] + bc[i];
  }
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

}  // namespace

TEST_CASE("octonion basis products match the quaternion-pair oracle") {
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      const auto ep = cd::basis<double, 8>(p);
      const auto eq = cd::basis<double, 8>(q);
      const auto got = cd::multiply<double, 8>(ep, eq);
      const auto want = oracle_oct_mul(ep, eq);
      for (int i = 0; i < 8; ++i) {
        INFO("e" << p << " * e" << q << " component " << i);
        REQUIRE(got[i] == want[i]);
      }
    }
  }
}

TEST_CASE("fixed sign convention spot checks") {
  auto prod = [](int p, int q) {
    return cd::multiply<double, 8>(cd::basis<double, 8>(p), cd::basis<double, 8>(q));
  };
  CHECK(prod(1, 2)[3] == 1.0);   // e1 e2 = e3
  CHECK(prod(1, 4)[5] == 1.0);   // e1 e4 = e5
  CHECK(prod(2, 4)[6] == 1.0);   // e2 e4 = e6
  CHECK(prod(3, 4)[7] == 1.0);   // e3 e4 = e7
  CHECK(prod(1, 1)[0] == -1.0);  // imaginary units square to -1
  CHECK(prod(2, 1)[3] == -1.0);  // anticommute
}

TEST_CASE("unit laws") {
  SampleRng rng(11);
  const auto one = cd::one<double, 8>();
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 8> x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    const auto lx = cd::multiply<double, 8>(one, x);
    const auto rx = cd::multiply<double, 8>(x, one);
    for (int i = 0; i < 8; ++i) {
      CHECK(lx[i] == x[i]);
      CHECK(rx[i] == x[i]);
    }
  }
}

TEST_CASE("inverse") {
  const auto one = cd::one<double, 8>();
  SECTION("unit is self-inverse") {
    const auto inv = cd::inverse<double, 8>(one);
    for (int i = 0; i < 8; ++i) CHECK(inv[i] == one[i]);
  }
  SECTION("e1 inverts to -e1") {
    const auto inv = cd::inverse<double, 8>(cd::basis<double, 8>(1));
    CHECK(inv[1] == -1.0);
    for (int i = 0; i < 8; ++i)
      if (i != 1) CHECK(inv[i] == 0.0);
  }
  SECTION("unit-norm element inverts to its conjugate") {
    std::array<double, 8> x{};
    x[0] = 0.6;
    x[2] = 0.8;
    const auto inv = cd::inverse<double, 8>(x);
    CHECK_THAT(inv[0], Catch::Matchers::WithinAbs(0.6, 1e-15));
    CHECK_THAT(inv[2], Catch::Matchers::WithinAbs(-0.8, 1e-15));
  }
  SECTION("x * inv(x) = 1 for random x") {
    SampleRng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      std::array<double, 8> x;
      for (auto& c : x) c = rng.uniform(-2.0, 2.0);
      const auto p = cd::multiply<double, 8>(x, cd::inverse<double, 8>(x));
      CHECK_THAT(p[0], Catch::Matchers::WithinAbs(1.0, 1e-13));
      for (int i = 1; i < 8; ++i) CHECK_THAT(p[i], Catch::Matchers::WithinAbs(0.0, 1e-13));
    }
  }
  SECTION("zero norm is a domain error") {
    std::array<double, 8> zero{};
    CHECK_THROWS_AS((cd::inverse<double, 8>(zero)), std::domain_error);
  }
}

TEST_CASE("norm is multiplicative") {
  SampleRng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<double, 8> a, b;
    for (auto& c : a) c = rng.uniform(-1.0, 1.0);
    for (auto& c : b) c = rng.uniform(-1.0, 1.0);
    const double na = std::sqrt(cd::norm_squared<double, 8>(a));
    const double nb = std::sqrt(cd::norm_squared<double, 8>(b));
    const double nab = std::sqrt(cd::norm_squared<double, 8>(cd::multiply<double, 8>(a, b)));
    CHECK_THAT(nab, Catch::Matchers::WithinAbs(na * nb, 1e-13));
  }
}

TEST_CASE("octonions are alternative but not associative") {
  SampleRng rng(14);
  double max_assoc_defect = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 8> a, b, c;
    for (auto& x : a) x = rng.uniform(-1.0, 1.0);
    for (auto& x : b) x = rng.uniform(-1.0, 1.0);
    for (auto& x : c) x = rng.uniform(-1.0, 1.0);

    const auto aa = cd::multiply<double, 8>(a, a);
    const auto left1 = cd::multiply<double, 8>(aa, b);
    const auto left2 = cd::multiply<double, 8>(a, cd::multiply<double, 8>(a, b));
    const auto right1 = cd::multiply<double, 8>(b, aa);
    const auto right2 = cd::multiply<double, 8>(cd::multiply<double, 8>(b, a), a);
    for (int i = 0; i < 8; ++i) {
      CHECK_THAT(left1[i], Catch::Matchers::WithinAbs(left2[i], 1e-13));
      CHECK_THAT(right1[i], Catch::Matchers::WithinAbs(right2[i], 1e-13));
    }

    const auto ab_c = cd::multiply<double, 8>(cd::multiply<double, 8>(a, b), c);
    const auto a_bc = cd::multiply<double, 8>(a, cd::multiply<double, 8>(b, c));
    for (int i = 0; i < 8; ++i)
      max_assoc_defect = std::max(max_assoc_defect, std::abs(ab_c[i] - a_bc[i]));
  }
  CHECK(max_assoc_defect > 0.1);  // genuinely nonassociative
}
