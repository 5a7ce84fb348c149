#pragma once

// Four-metrics with a Killing field built from the hyperCR Toda spaces: the
// scalar-flat Kaehler metrics of the LeBrun ansatz, their Einstein rescalings,
// and the Pedersen metrics on the ball.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ewtoda/curvature4.hpp"
#include "ewtoda/families3.hpp"
#include "ewtoda/monopole.hpp"
#include "ewtoda/sphere.hpp"

namespace ewtoda {

/// Scalar curvature of einstein_rescaled(h, a) divided by a; the ratio to the
/// quoted -3a is 4. Frozen by test_metrics4.cpp.
inline constexpr double kEinsteinScalPerA = -12.0;

namespace detail {

inline Mat<Jet2<4>, 4> zero_metric() {
  Mat<Jet2<4>, 4> g;
  for (auto& row : g)
    for (auto& c : row) c = Jet2<4>(0.0);
  return g;
}

inline bool theorem1_admissible(const HoloFn& h, const Point<4>& p) {
  try {
    return std::norm(Complex{p[2], 0.0} + h(Complex{p[0], p[1]})) > kPositivityMargin;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace detail

/// g_M = w (z+h)(z+hbar) g_S2 + w dz^2 + w^{-1} (beta + v dz)^2 on (x, y, z, t).
inline Metric4 sfk_metric(const HoloFn& h, const HoloFn& f) {
  Metric4 m;
  m.eval = [h, f](const Point<4>& p) {
    const MonopoleData<4> mono = strachan_monopole<4>(h, f, p);
    if (!(mono.w.value > kPositivityMargin)) throw DomainError("monopole w below the positivity margin", mono.w.value);
    const Jet2<4> q = shifted_norm<4>(h, p);
    const Jet2<4> s = sphere_factor<4>(p);
    const Vec<Jet2<4>, 4> alpha{mono.theta[0], mono.theta[1], mono.v, Jet2<4>(1.0)};
    const Jet2<4> inv_w = inverse(mono.w);
    auto g = detail::zero_metric();
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) {
        g[a][b] = inv_w * alpha[a] * alpha[b];
        g[b][a] = g[a][b];
      }
    const Jet2<4> horiz = mono.w * q * s;
    g[0][0] += horiz;
    g[1][1] += horiz;
    g[2][2] += mono.w;
    return g;
  };
  m.admissible = [h, f](const Point<4>& p) {
    if (std::hypot(p[0], p[1]) <= kChartEpsilon || !detail::theorem1_admissible(h, p)) return false;
    try {
      const Complex q = f(Complex{p[0], p[1]}) / (Complex{p[2], 0.0} + h(Complex{p[0], p[1]}));
      return q.real() > kPositivityMargin;
    } catch (const DomainError&) {
      return false;
    }
  };
  return m;
}

/// 1/z^2 [ P/Q dz^2 + P g_S2 + Q/P (beta + v dz)^2 ] with P = Re(h) z + |h|^2,
/// Q = (z+h)(z+hbar) and (beta, v) those of the monopole f = h.
inline Metric4 einstein_metric(const HoloFn& h) {
  Metric4 m;
  m.eval = [h](const Point<4>& p) {
    const CJet2<4> hv = h.eval<4>(p);
    const Jet2<4> z = seed_coordinate<4>(2, p[2]);
    const Jet2<4> big_p = hv.re * z + hv.norm();
    const Jet2<4> big_q = (hv + z).norm();
    const Jet2<4> s = sphere_factor<4>(p);
    const BetaForm<4> beta = beta_potential<4>(h, p);
    const Jet2<4> v = static_cast<double>(-kMonopoleVSign) * (hv / (hv + z)).im;
    const Vec<Jet2<4>, 4> alpha{beta.x, beta.y, v, Jet2<4>(1.0)};
    const Jet2<4> inv_z2 = inverse(z * z);
    const Jet2<4> fibre = inv_z2 * big_q / big_p;
    auto g = detail::zero_metric();
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) {
        g[a][b] = fibre * alpha[a] * alpha[b];
        g[b][a] = g[a][b];
      }
    const Jet2<4> horiz = inv_z2 * big_p * s;
    g[0][0] += horiz;
    g[1][1] += horiz;
    g[2][2] += inv_z2 * big_p / big_q;
    return g;
  };
  m.admissible = [h](const Point<4>& p) {
    if (p[2] <= kPositivityMargin || std::hypot(p[0], p[1]) <= kChartEpsilon || !detail::theorem1_admissible(h, p))
      return false;
    try {
      const Complex hv = h(Complex{p[0], p[1]});
      return hv.real() * p[2] + std::norm(hv) > kPositivityMargin;
    } catch (const DomainError&) {
      return false;
    }
  };
  return m;
}

/// Pedersen metric on (rho, theta, phi, psi) with sigma_1^2 + sigma_2^2 =
/// dtheta^2 + sin^2 theta dphi^2 and sigma_3 = dpsi + cos theta dphi.
inline Metric4 pedersen_metric(double m_param) {
  Metric4 m;
  m.coordinates = {"rho", "theta", "phi", "psi"};
  const double m2 = m_param * m_param;
  m.eval = [m2](const Point<4>& p) {
    const Jet2<4> rho = seed_coordinate<4>(0, p[0]);
    const Jet2<4> th = seed_coordinate<4>(1, p[1]);
    const Jet2<4> r2 = rho * rho;
    const Jet2<4> r4 = r2 * r2;
    const Jet2<4> one_minus = 1.0 - r2;
    const Jet2<4> pre = inverse(one_minus * one_minus);
    const Jet2<4> a2 = 1.0 + m2 * r2;
    const Jet2<4> a4 = 1.0 + m2 * r4;
    const Jet2<4> c12 = pre * 0.25 * r2 * a2;
    const Jet2<4> c3 = pre * 0.25 * r2 * a4 / a2;
    const Jet2<4> s = sin(th);
    const Jet2<4> c = cos(th);
    auto g = detail::zero_metric();
    g[0][0] = pre * a2 / a4;
    g[1][1] = c12;
    g[2][2] = c12 * s * s + c3 * c * c;
    g[2][3] = c3 * c;
    g[3][2] = g[2][3];
    g[3][3] = c3;
    return g;
  };
  m.admissible = [](const Point<4>& p) {
    return p[0] > kPositivityMargin && p[0] < 1.0 - kPositivityMargin && std::sin(p[1]) > 1e-3;
  };
  return m;
}

/// Multiplies every component (with its jets) by factor.
inline Metric4 conformal_rescale(const Metric4& base, std::function<Jet2<4>(const Point<4>&)> factor) {
  Metric4 m = base;
  m.eval = [inner = base.eval, factor](const Point<4>& p) {
    const Jet2<4> f = factor(p);
    if (!(f.value > kPositivityMargin)) throw DomainError("conformal factor below the positivity margin", f.value);
    auto g = inner(p);
    for (auto& row : g)
      for (auto& c : row) c = f * c;
    return g;
  };
  return m;
}

/// sfk_metric(h, a h + b) rescaled by 1/(a z - b)^2, where w = a(1 - z u_z/2) + b u_z/2.
/// Einstein for a > 0 with scalar curvature kEinsteinScalPerA * a.
inline Metric4 einstein_rescaled(const HoloFn& h, double a, double b = 0.0) {
  if (!(a > 0.0)) throw DomainError("Einstein rescaling requires a > 0", a);
  Metric4 base = sfk_metric(h, h.affine(Complex{a, 0.0}, Complex{b, 0.0}));
  Metric4 m = conformal_rescale(base, [a, b](const Point<4>& p) {
    const Jet2<4> q = a * seed_coordinate<4>(2, p[2]) - b;
    return inverse(q * q);
  });
  m.admissible = [a, b, inner = base.admissible](const Point<4>& p) {
    return a * p[2] - b > kPositivityMargin && inner(p);
  };
  return m;
}

/// |d Omega| in the g_M norm for Omega = dz ^ (dt + theta) + w e^u dx ^ dy, given
/// the pointwise jets of e^u, w and the 1-form dt + theta on (x, y, z, t).
inline double kahler_residual(const Jet2<4>& eu, const Jet2<4>& w, const Vec<Jet2<4>, 4>& alpha,
                              const Mat<double, 4>& gm_inv) {
  Mat<Jet2<4>, 4> omega = detail::zero_metric();
  for (std::size_t b = 0; b < 4; ++b) {
    omega[2][b] = omega[2][b] + alpha[b];
    omega[b][2] = omega[b][2] - alpha[b];
  }
  const Jet2<4> weu = w * eu;
  omega[0][1] = omega[0][1] + weu;
  omega[1][0] = omega[1][0] - weu;
  // (d Omega)_abc = d_a Omega_bc + d_b Omega_ca + d_c Omega_ab
  std::array<Mat<double, 4>, 4> d{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        d[a][b][c] = omega[b][c].grad[a] + omega[c][a].grad[b] + omega[a][b].grad[c];
  double s = 0.0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        double raised = 0.0;
        for (std::size_t a2 = 0; a2 < 4; ++a2)
          for (std::size_t b2 = 0; b2 < 4; ++b2)
            for (std::size_t c2 = 0; c2 < 4; ++c2)
              raised += gm_inv[a][a2] * gm_inv[b][b2] * gm_inv[c][c2] * d[a2][b2][c2];
        s += raised * d[a][b][c];
      }
  return std::sqrt(std::max(0.0, s / 6.0));
}

/// Closedness of the candidate Kaehler form of sfk_metric(h, f) at p = (x, y, z, t).
inline double kahler_form_closedness(const HoloFn& h, const HoloFn& f, const Point<4>& p) {
  const Metric4 gm = sfk_metric(h, f);
  const auto inv = invert<double, 4>(values(gm.at(p)));
  const MonopoleData<4> mono = strachan_monopole<4>(h, f, p);
  const Jet2<4> eu = shifted_norm<4>(h, p) * sphere_factor<4>(p);
  const Vec<Jet2<4>, 4> alpha{mono.theta[0], mono.theta[1], mono.v, Jet2<4>(1.0)};
  return kahler_residual(eu, mono.w, alpha, inv.inverse);
}

struct QuotientCheck {
  double max_z_variation = 0.0;
  double match_residual = 0.0;
};

/// The metric (w^2 + v^2)(z+h)(z+hbar) g_S2 + beta^2 on (x, y, t) at each height z,
/// compared across heights and against the geodesic-symmetry structure with H = 1/f.
inline QuotientCheck quotient_check(const HoloFn& h, const HoloFn& f, const Point<2>& p2,
                                    const std::vector<double>& z_samples) {
  if (std::norm(f(Complex{p2[0], p2[1]})) == 0.0) throw DomainError("f vanishes at the quotient point", 0.0);
  const GeodesicSymmetryFamily target = geodesic_symmetry_family(f.reciprocal());
  const Mat<double, 3> reference = values(target.structure.at(Point<3>{p2[0], p2[1], 0.0}).g);
  QuotientCheck out;
  Mat<double, 3> lo{};
  Mat<double, 3> hi{};
  bool first = true;
  for (const double z : z_samples) {
    const Point<3> p{p2[0], p2[1], z};
    const MonopoleData<3> mono = strachan_monopole<3>(h, f, p);
    const double q = shifted_norm<3>(h, p).value;
    const double s = sphere_factor<3>(p).value;
    const Vec<double, 3> beta{mono.theta[0].value, mono.theta[1].value, 1.0};
    const double horiz = (mono.w.value * mono.w.value + mono.v.value * mono.v.value) * q * s;
    Mat<double, 3> rep{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) rep[i][j] = beta[i] * beta[j];
    rep[0][0] += horiz;
    rep[1][1] += horiz;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        lo[i][j] = first ? rep[i][j] : std::min(lo[i][j], rep[i][j]);
        hi[i][j] = first ? rep[i][j] : std::max(hi[i][j], rep[i][j]);
        out.match_residual = std::max(out.match_residual, std::abs(rep[i][j] - reference[i][j]));
      }
    first = false;
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.max_z_variation = std::max(out.max_z_variation, hi[i][j] - lo[i][j]);
  return out;
}

struct PedersenCorrespondence {
  double w2_ours = 0.0;
  double w2_pedersen = 0.0;
  double scal_ours = 0.0;
  double scal_pedersen = 0.0;
};

/// |W|^2 of einstein_metric(1 + i m) at height z and of pedersen_metric(m) at
/// rho = (1+z)^{-1/2}. Both metrics are cohomogeneity one, so the angular and
/// stereographic positions are fixed reference values.
inline PedersenCorrespondence pedersen_correspondence(double m_param, double z) {
  if (!(z > 0.0)) throw DomainError("correspondence height must be positive", z);
  const double rho = 1.0 / std::sqrt(1.0 + z);
  const Curvature4 ours = curvature(einstein_metric(HoloFn::constant({1.0, m_param})), Point<4>{0.4, 0.3, z, 0.0});
  const Curvature4 ped = curvature(pedersen_metric(m_param), Point<4>{rho, 1.1, 0.3, 0.2});
  return {ours.weyl_norm2, ped.weyl_norm2, ours.scal, ped.scal};
}

}  // namespace ewtoda
