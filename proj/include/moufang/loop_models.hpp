#ifndef MOUFANG_LOOP_MODELS_HPP
#define MOUFANG_LOOP_MODELS_HPP

#include <array>
#include <string>

#include "moufang/cayley_dickson.hpp"
#include "moufang/chart.hpp"

namespace moufang {

/// Local analytic loop carried by the unit sphere of an N-dimensional
/// Cayley-Dickson algebra, in the graph chart with the unit at the origin.
///
/// N = 8 gives the unit octonions: a genuinely nonassociative Moufang loop of
/// chart dimension 7. N = 4 gives the unit quaternions (chart dimension 3),
/// an associative control where every associator must vanish.
///
/// All operations are scalar-generic so jets can flow through them.
template <int N>
struct SphereLoop {
  static constexpr int dim = N - 1;  // chart dimension r
  static constexpr bool associative = (N <= 4);
  // chart domain is |x| < 1; sampling stays in a smaller ball so that all
  // composite products appearing in any checked identity remain in-chart
  static constexpr double chart_radius = 1.0;
  static constexpr double sample_radius = 0.3;

  template <class Scalar>
  using Point = std::array<Scalar, dim>;

  static const char* name() { return N == 8 ? "octonion" : (N == 4 ? "quaternion" : "sphere"); }

  template <class Scalar>
  static Point<Scalar> mul(const Point<Scalar>& g, const Point<Scalar>& h) {
    return chart::project<Scalar, N>(
        cd::multiply<Scalar, N>(chart::embed<Scalar, N>(g), chart::embed<Scalar, N>(h)));
  }

  template <class Scalar>
  static Point<Scalar> inv(const Point<Scalar>& g) {
    return chart::project<Scalar, N>(cd::inverse<Scalar, N>(chart::embed<Scalar, N>(g)));
  }

  template <class Scalar = double>
  static Point<Scalar> unit() {
    Point<Scalar> e{};
    return e;
  }
};

using OctonionLoop = SphereLoop<8>;
using QuaternionLoop = SphereLoop<4>;

}

#endif
