#pragma once

// Monopoles over the hyperCR Toda spaces: solutions w of the linearized Toda
// equation together with the connection 1-form theta, *(dw - omega w) = d theta.

#include <cmath>

#include "ewtoda/families3.hpp"
#include "ewtoda/holo.hpp"
#include "ewtoda/sphere.hpp"
#include "ewtoda/weyl3.hpp"

namespace ewtoda {

/// Sign of v relative to the closed form i f/(2(z+h)) - i fbar/(2(z+hbar)).
/// Together with beta_potential and the dx^dy^dz orientation only this sign
/// satisfies *(dw - omega w) = d theta; frozen by test_monopole.cpp.
inline constexpr int kMonopoleVSign = -1;

template <std::size_t N>
struct MonopoleData {
  Jet2<N> w;
  Jet2<N> v;
  /// theta = beta + v dz - dt on (x, y, z)
  Vec<Jet2<N>, 3> theta;
};

/// w = Re(f/(z+h)); v = kMonopoleVSign * (-Im(f/(z+h))). The chart carries
/// (x, y, z) in its first three coordinates.
template <std::size_t N>
MonopoleData<N> strachan_monopole(const HoloFn& h, const HoloFn& f, const Point<N>& p) {
  const CJet2<N> zh = h.eval<N>(p) + seed_coordinate<N>(2, p[2]);
  if (!(std::norm(zh.value()) > kPositivityMargin))
    throw DomainError("(z+h)(z+hbar) below the positivity margin", std::norm(zh.value()));
  const CJet2<N> q = f.eval<N>(p) / zh;
  MonopoleData<N> m;
  m.w = q.re;
  m.v = static_cast<double>(-kMonopoleVSign) * q.im;
  const BetaForm<N> beta = beta_potential<N>(f, p);
  m.theta = {beta.x, beta.y, m.v};
  return m;
}

/// u_z = 1/(z+h) + 1/(z+hbar) in the normalized Theorem-1 chart.
template <std::size_t N>
Jet2<N> theorem1_u_z(const HoloFn& h, const Point<N>& p) {
  const CJet2<N> zh = h.eval<N>(p) + seed_coordinate<N>(2, p[2]);
  return 2.0 * zh.re / zh.norm();
}

/// w_xx + w_yy + (e^u w)_zz.
inline double monopole_residual(const JetField<3>& u_eval, const JetField<3>& w_eval, const Point<3>& p) {
  const Jet2<3> w = w_eval(p);
  const Jet2<3> euw = exp(u_eval(p)) * w;
  return w.hess[0][0] + w.hess[1][1] + euw.hess[2][2];
}

/// |*(dw - omega w) - d theta| for the Strachan monopole over the Theorem-1 structure.
inline double theta_residual(const HoloFn& h, const HoloFn& f, const Point<3>& p) {
  const WeylStructure3 base = theorem1_structure(h);
  const WeylPointData d = weyl_connection(base, p);
  const MonopoleData<3> m = strachan_monopole<3>(h, f, p);
  Vec<double, 3> dw{};
  for (std::size_t i = 0; i < 3; ++i) dw[i] = m.w.grad[i] - d.omega[i].value * m.w.value;
  const Mat<double, 3> lhs = hodge_1form(dw, d);
  Mat<double, 3> diff{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) diff[i][j] = lhs[i][j] - (m.theta[j].grad[i] - m.theta[i].grad[j]);
  return norm2_tensor<3>(diff, d.ginv) / std::sqrt(2.0);
}

/// |w(f = a h + b) - (a (1 - z u_z / 2) + b u_z / 2)|.
inline double special_monopole_identity(const HoloFn& h, double a, double b, const Point<3>& p) {
  const HoloFn f = h.affine(Complex{a, 0.0}, Complex{b, 0.0});
  const MonopoleData<3> m = strachan_monopole<3>(h, f, p);
  const double uz = theorem1_u_z<3>(h, p).value;
  return std::abs(m.w.value - (a * (1.0 - 0.5 * p[2] * uz) + 0.5 * b * uz));
}

}  // namespace ewtoda
