#ifndef MOUFANG_SAMPLING_HPP
#define MOUFANG_SAMPLING_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace moufang {

/// Deterministic sampling built on std::mt19937_64 (bit-exact across
/// platforms by the standard). Uniform doubles come from the top 53 bits of
/// the raw output, never from std::uniform_real_distribution, whose mapping
/// is implementation-defined.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1].
  double uniform01_open_low() { return 1.0 - uniform01(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// Uniform on the unit sphere in R^D.
  template <int D>
  std::array<double, D> unit_sphere() {
    std::array<double, D> x;
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (int i = 0; i < D; ++i) {
        x[i] = normal();
        n2 += x[i] * x[i];
      }
    } while (n2 == 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < D; ++i) x[i] *= inv;
    return x;
  }

  /// Uniform in the ball of the given radius in R^D.
  template <int D>
  std::array<double, D> ball(double radius) {
    auto x = unit_sphere<D>();
    const double r = radius * std::pow(uniform01(), 1.0 / D);
    for (int i = 0; i < D; ++i) x[i] *= r;
    return x;
  }

  /// Independent sub-stream keyed by name, so adding or reordering records
  /// never perturbs the samples other records see.
  SampleRng derive(std::string_view name) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return SampleRng(seed_ ^ h);
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}

#endif
