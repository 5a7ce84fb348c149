#pragma once

// Textbook metrics with known curvature, used to pin the sign conventions.

#include "ewtoda/curvature4.hpp"
#include "ewtoda/families3.hpp"

namespace ewtoda {

/// Euclidean R^4.
inline Metric4 flat_metric4() {
  Metric4 m;
  m.eval = [](const Point<4>&) {
    Mat<Jet2<4>, 4> g;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g[i][j] = Jet2<4>(i == j ? 1.0 : 0.0);
    return g;
  };
  return m;
}

/// Unit round S^4 in stereographic coordinates, 4/(1+|x|^2)^2 times the identity.
/// Ricci = 3g.
inline Metric4 round_s4_metric() {
  Metric4 m;
  m.coordinates = {"x1", "x2", "x3", "x4"};
  m.eval = [](const Point<4>& p) {
    Jet2<4> r2(0.0);
    for (std::size_t i = 0; i < 4; ++i) {
      const Jet2<4> x = seed_coordinate<4>(i, p[i]);
      r2 += x * x;
    }
    const Jet2<4> q = 1.0 + r2;
    const Jet2<4> c = 4.0 / (q * q);
    Mat<Jet2<4>, 4> g;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g[i][j] = i == j ? c : Jet2<4>(0.0);
    return g;
  };
  return m;
}

/// Unit round S^3: the a = 1 Berger sphere has radius 2, so rescale by 1/4
/// (a constant gauge change keeps omega = 0). Ricci = 2g.
inline WeylStructure3 round_s3_structure() {
  return gauge_transform(berger_sphere(1.0), [](const Point<3>&) { return Jet2<3>(-std::log(2.0)); });
}

/// max |Ric - lambda g| for an Einstein oracle.
template <std::size_t N>
double einstein_oracle_residual(const Mat<double, N>& ricci, const Mat<double, N>& g, double lambda) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(ricci[i][j] - lambda * g[i][j]));
  return worst;
}

}  // namespace ewtoda
