#pragma once

// Round unit 2-sphere in the stereographic chart zeta = x + i y and the explicit
// connection potential beta with d(beta) = 1/2 (f + conj f) vol_S2.

#include <cmath>

#include "ewtoda/holo.hpp"
#include "ewtoda/jet.hpp"

namespace ewtoda {

/// Chart-center exclusion radius wherever beta is involved.
inline constexpr double kChartEpsilon = 1e-3;

/// Conformal factor 4/(1+x^2+y^2)^2: g_S2 = factor (dx^2 + dy^2). The area
/// density of vol_S2 = 2i dzeta^dzetabar/(1+|zeta|^2)^2 is the same function.
template <std::size_t N>
Jet2<N> sphere_factor(const Point<N>& p) {
  const Jet2<N> x = seed_coordinate<N>(0, p[0]);
  const Jet2<N> y = seed_coordinate<N>(1, p[1]);
  const Jet2<N> q = 1.0 + x * x + y * y;
  return 4.0 * inverse(q * q);
}

template <std::size_t N>
struct SphereMetric {
  Jet2<N> xx;
  Jet2<N> xy;
  Jet2<N> yy;
};

template <std::size_t N>
SphereMetric<N> sphere_metric(const Point<N>& p) {
  const Jet2<N> c = sphere_factor<N>(p);
  return {c, Jet2<N>(0.0), c};
}

/// Density of vol_S2 against dx^dy.
template <std::size_t N>
Jet2<N> sphere_volume(const Point<N>& p) {
  return sphere_factor<N>(p);
}

/// Components of beta = dt + i/(1+|zeta|^2) (f dzeta/zeta - conj(f) dzetabar/zetabar).
template <std::size_t N>
struct BetaForm {
  Jet2<N> x;
  Jet2<N> y;
  Jet2<N> t;
};

template <std::size_t N>
BetaForm<N> beta_potential(const HoloFn& f, const Point<N>& p) {
  const double r = std::hypot(p[0], p[1]);
  if (r < kChartEpsilon) throw DomainError("beta potential is singular at the chart center", r);
  const CJet2<N> zeta = seed_zeta<N>(p);
  const CJet2<N> a = f.eval<N>(p) / zeta;
  // i (A dzeta - conj(A) dzetabar) = -2 Im(A) dx - 2 Re(A) dy
  const Jet2<N> scale = -2.0 * inverse(1.0 + zeta.norm());
  return {scale * a.im, scale * a.re, Jet2<N>(1.0)};
}

}  // namespace ewtoda
