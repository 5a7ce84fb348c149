#pragma once

// Constructors for the three-dimensional Einstein-Weyl families: the
// LeBrun-Ward (Toda) gauge, the hyperCR Toda family over S^2, the family with
// geodesic symmetry and the Berger spheres.

#include <cmath>
#include <stdexcept>

#include "ewtoda/holo.hpp"
#include "ewtoda/sphere.hpp"
#include "ewtoda/weyl3.hpp"

namespace ewtoda {

/// Positivity margin for (z+h)(z+hbar), w, and similar denominators.
inline constexpr double kPositivityMargin = 1e-6;

/// Sign relating the closed-form kappa i(h - hbar)/(2(z+h)(z+hbar)) to the
/// section solving D kappa = -1/2 *F^D under the dx^dy^dz orientation.
/// Frozen from the regression test in test_families3.cpp.
inline constexpr int kTodaKappaSign = -1;

/// The hyperCR flat connection on L^{-1} (x) TB is D + sign kappa *1, with *1
/// acting as Y -> X x Y. Same value for every family under its chart orientation;
/// frozen from the regression tests in test_families3.cpp.
inline constexpr int kHyperCRFlatSign = -1;

/// g = e^u (dx^2 + dy^2) + dz^2, omega = -u_z dz.
inline WeylStructure3 toda_lw(JetField<3> u_eval) {
  WeylStructure3 w;
  w.eval = [u_eval = std::move(u_eval)](const Point<3>& p) {
    const Jet2<3> u = u_eval(p);
    const Jet2<3> eu = exp(u);
    WeylGauge gauge;
    for (auto& row : gauge.g)
      for (auto& c : row) c = Jet2<3>(0.0);
    gauge.g[0][0] = eu;
    gauge.g[1][1] = eu;
    gauge.g[2][2] = Jet2<3>(1.0);
    gauge.omega = {Jet1<3>(0.0), Jet1<3>(0.0), -u.d(2)};
    return gauge;
  };
  return w;
}

/// u_xx + u_yy + (e^u)_zz, the z-term taken from the jet of e^u itself.
inline double toda_residual(const JetField<3>& u_eval, const Point<3>& p) {
  const Jet2<3> u = u_eval(p);
  const Jet2<3> eu = exp(u);
  return u.hess[0][0] + u.hess[1][1] + eu.hess[2][2];
}

/// e^f = 4|F'|^2 / (1 + a|F|^2)^2 as a jet in the chart coordinates.
template <std::size_t N>
Jet2<N> liouville_exp_f(const HoloFn& F, const HoloFn& dF, double a, const Point<N>& p) {
  const CJet2<N> fv = F.eval<N>(p);
  const CJet2<N> dv = dF.eval<N>(p);
  const Jet2<N> q = 1.0 + a * fv.norm();
  return 4.0 * dv.norm() / (q * q);
}

/// f_xx + f_yy + 2a e^f for the general Liouville solution generated by F.
inline double liouville_residual(const HoloFn& F, double a, const Point<3>& p) {
  const HoloFn dF = F.derivative();
  if (std::norm(dF(Complex{p[0], p[1]})) == 0.0) throw DomainError("critical point of F", std::hypot(p[0], p[1]));
  const Jet2<3> ef = liouville_exp_f<3>(F, dF, a, p);
  const Jet2<3> f = log(ef);
  return f.hess[0][0] + f.hess[1][1] + 2.0 * a * ef.value;
}

/// (z+h)(z+hbar) as a jet; z is chart coordinate 2.
template <std::size_t N>
Jet2<N> shifted_norm(const HoloFn& h, const Point<N>& p) {
  const CJet2<N> zh = h.eval<N>(p) + seed_coordinate<N>(2, p[2]);
  return zh.norm();
}

/// i(h - hbar) / (2 (z+h)(z+hbar)) = -Im(h) / |z+h|^2.
template <std::size_t N>
Jet2<N> kappa_closed_form(const HoloFn& h, const Point<N>& p) {
  const CJet2<N> hv = h.eval<N>(p);
  return -hv.im / shifted_norm<N>(h, p);
}

struct HyperCRTodaFamily {
  WeylStructure3 structure;
  /// hyperCR section kappa solving the twistor equations under the chart orientation.
  JetField<3> kappa;
  /// Toda potential u of the LeBrun-Ward gauge.
  JetField<3> u;
  HoloFn h;
  double a = 1.0;
  HoloFn F;
  bool normalized = true;
};

/// g = (z+h)(z+hbar) g_S2 + dz^2, omega = -(2z+h+hbar)/((z+h)(z+hbar)) dz,
/// assembled directly from h (no Toda potential involved).
inline WeylStructure3 theorem1_structure(const HoloFn& h) {
  WeylStructure3 w;
  w.eval = [h](const Point<3>& p) {
    const CJet2<3> hv = h.eval<3>(p);
    const Jet2<3> z = seed_coordinate<3>(2, p[2]);
    const Jet2<3> q = (hv + z).norm();
    const Jet2<3> s = sphere_factor<3>(p);
    WeylGauge gauge;
    for (auto& row : gauge.g)
      for (auto& c : row) c = Jet2<3>(0.0);
    gauge.g[0][0] = q * s;
    gauge.g[1][1] = q * s;
    gauge.g[2][2] = Jet2<3>(1.0);
    const Jet2<3> wz = -(2.0 * z + 2.0 * hv.re) / q;
    gauge.omega = {Jet1<3>(0.0), Jet1<3>(0.0), wz.truncate()};
    return gauge;
  };
  w.admissible = [h](const Point<3>& p) {
    try {
      return std::norm(Complex{p[2], 0.0} + h(Complex{p[0], p[1]})) > kPositivityMargin;
    } catch (const DomainError&) {
      return false;
    }
  };
  return w;
}

/// The hyperCR Toda family. With a = 1, F = zeta the structure is the closed
/// form of theorem1_structure; otherwise it is the LeBrun-Ward gauge of
/// e^u = 4a(z+h)(z+hbar)|F'|^2/(1+a|F|^2)^2.
inline HyperCRTodaFamily hypercr_toda_family(const HoloFn& h, double a = 1.0, const HoloFn& F = HoloFn::identity()) {
  if (!(a > 0.0)) throw DomainError("hyperCR Toda family requires a > 0", a);
  if (F.is_constant()) throw std::invalid_argument("hyperCR Toda family requires a nonconstant F");
  HyperCRTodaFamily fam;
  fam.h = h;
  fam.a = a;
  fam.F = F;
  const HoloFn dF = F.derivative();
  fam.normalized = (a == 1.0 && F.numerator().size() == 2 && F.is_polynomial() &&
                    F.numerator()[0] == Complex{0.0, 0.0} && F.numerator()[1] == Complex{1.0, 0.0});
  fam.u = [h, a, F, dF](const Point<3>& p) {
    return log(a * shifted_norm<3>(h, p) * liouville_exp_f<3>(F, dF, a, p));
  };
  fam.kappa = [h](const Point<3>& p) { return static_cast<double>(kTodaKappaSign) * kappa_closed_form<3>(h, p); };
  const WeylStructure3 direct = theorem1_structure(h);
  if (fam.normalized) {
    fam.structure = direct;
  } else {
    fam.structure = toda_lw(fam.u);
    fam.structure.admissible = direct.admissible;
  }
  return fam;
}

struct GeodesicSymmetryFamily {
  WeylStructure3 structure;
  /// generator K = d/dt, unit in the gauge
  VectorField<3> symmetry;
  /// tau = (i/2)(H - Hbar) = -Im H and kappa = (H + Hbar)/4 = Re(H)/2 in the gauge
  JetField<3> tau;
  JetField<3> kappa;
  HoloFn H;
};

/// g = |H|^{-2} g_S2 + beta^2, omega = (i/2)(H - Hbar) beta on coordinates (x, y, t),
/// with beta = beta_potential(1/H).
inline GeodesicSymmetryFamily geodesic_symmetry_family(const HoloFn& H) {
  GeodesicSymmetryFamily fam;
  fam.H = H;
  const HoloFn f = H.reciprocal();
  fam.structure.coordinates = {"x", "y", "t"};
  fam.structure.eval = [H, f](const Point<3>& p) {
    const CJet2<3> hv = H.eval<3>(p);
    const Jet2<3> inv_h2 = inverse(hv.norm());
    const Jet2<3> s = sphere_factor<3>(p) * inv_h2;
    const BetaForm<3> beta = beta_potential<3>(f, p);
    const Vec<Jet2<3>, 3> b{beta.x, beta.y, beta.t};
    WeylGauge gauge;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) gauge.g[i][j] = b[i] * b[j];
    gauge.g[0][0] += s;
    gauge.g[1][1] += s;
    for (std::size_t i = 0; i < 3; ++i) gauge.omega[i] = (-hv.im * b[i]).truncate();
    return gauge;
  };
  fam.structure.admissible = [H](const Point<3>& p) {
    if (std::hypot(p[0], p[1]) <= kChartEpsilon) return false;
    try {
      return std::norm(H(Complex{p[0], p[1]})) > kPositivityMargin;
    } catch (const DomainError&) {
      return false;
    }
  };
  fam.symmetry = [](const Point<3>&) { return Vec<Jet2<3>, 3>{Jet2<3>(0.0), Jet2<3>(0.0), Jet2<3>(1.0)}; };
  fam.tau = [H](const Point<3>& p) { return -H.eval<3>(p).im; };
  fam.kappa = [H](const Point<3>& p) { return 0.5 * H.eval<3>(p).re; };
  return fam;
}

/// omega = b sigma_3 with b = a sqrt(1 - a^2).
inline double berger_b(double a) { return a * std::sqrt(1.0 - a * a); }

/// g = dtheta^2 + sin^2(theta) dphi^2 + a^2 (dpsi + cos(theta) dphi)^2,
/// omega = b (dpsi + cos(theta) dphi), on Euler angles (theta, phi, psi).
inline WeylStructure3 berger_sphere(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("Berger parameter must satisfy 0 < a <= 1", a);
  const double b = berger_b(a);
  WeylStructure3 w;
  w.coordinates = {"theta", "phi", "psi"};
  w.eval = [a, b](const Point<3>& p) {
    const Jet2<3> th = seed_coordinate<3>(0, p[0]);
    const Jet2<3> s = sin(th);
    const Jet2<3> c = cos(th);
    WeylGauge gauge;
    for (auto& row : gauge.g)
      for (auto& e : row) e = Jet2<3>(0.0);
    gauge.g[0][0] = Jet2<3>(1.0);
    gauge.g[1][1] = s * s + (a * a) * c * c;
    gauge.g[1][2] = (a * a) * c;
    gauge.g[2][1] = gauge.g[1][2];
    gauge.g[2][2] = Jet2<3>(a * a);
    gauge.omega = {Jet1<3>(0.0), (b * c).truncate(), Jet1<3>(b)};
    return gauge;
  };
  w.admissible = [](const Point<3>& p) { return std::sin(p[0]) > 1e-3; };
  return w;
}

}  // namespace ewtoda
