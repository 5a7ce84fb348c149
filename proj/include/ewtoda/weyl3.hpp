#pragma once

// Gauged three-dimensional Weyl geometry. A Weyl structure is carried by a
// representative metric g and the 1-form omega with Dg = -2 omega (x) g, i.e.
//
//   D_X Y = LC_X Y + omega(X) Y + omega(Y) X - g(X, Y) omega^#.
//
// Weighted quantities (sections of L^w) are plain functions in the active gauge.

#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "ewtoda/jet.hpp"
#include "ewtoda/tensor.hpp"

namespace ewtoda {

/// Pointwise gauge data. omega is carried to first order: the connection and its
/// curvature consume only omega and its first derivatives.
struct WeylGauge {
  Mat<Jet2<3>, 3> g;
  Vec<Jet1<3>, 3> omega;
};

struct WeylStructure3 {
  std::function<WeylGauge(const Point<3>&)> eval;
  /// Admissibility predicate; empty means every point is admissible.
  std::function<bool(const Point<3>&)> admissible;
  /// Sign of the coordinate volume form d0^d1^d2 under the declared orientation.
  int orientation = 1;
  std::array<std::string, 3> coordinates{"x", "y", "z"};

  bool is_admissible(const Point<3>& p) const { return !admissible || admissible(p); }

  WeylGauge at(const Point<3>& p) const {
    if (!is_admissible(p)) throw DomainError("point outside the admissible domain", p[2]);
    return eval(p);
  }
};

template <std::size_t N>
using JetField = std::function<Jet2<N>(const Point<N>&)>;
template <std::size_t N>
using VectorField = std::function<Vec<Jet2<N>, N>(const Point<N>&)>;

/// Everything pointwise curvature needs: values, order-1 inverse metric and the
/// Weyl connection coefficients with their first derivatives.
struct WeylPointData {
  Mat<double, 3> g{};
  Mat<double, 3> ginv{};
  Mat<Jet1<3>, 3> ginv_jet{};
  Jet1<3> sqrt_det;
  Vec<Jet1<3>, 3> omega{};
  Christoffel<3> gamma{};
  int orientation = 1;
};

inline WeylPointData weyl_connection(const WeylStructure3& w, const Point<3>& p) {
  const WeylGauge gauge = w.at(p);
  WeylPointData d;
  d.orientation = w.orientation;
  d.g = values(gauge.g);
  const auto inv = invert<Jet1<3>, 3>(truncate(gauge.g));
  if (!(inv.determinant.value > 0.0)) throw DomainError("metric is not positive definite", inv.determinant.value);
  d.ginv_jet = inv.inverse;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d.ginv[i][j] = inv.inverse[i][j].value;
  d.sqrt_det = sqrt(inv.determinant);
  d.omega = gauge.omega;

  d.gamma = levi_civita_connection<3>(gauge.g, d.ginv_jet);
  // omega^l as an order-1 jet
  Vec<Jet1<3>, 3> omega_up{};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m) omega_up[l] += d.ginv_jet[l][m] * d.omega[m];
  const auto g1 = truncate(gauge.g);
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Jet1<3>& c = d.gamma[l][i][j];
        if (l == j) c += d.omega[i];
        if (l == i) c += d.omega[j];
        c -= g1[i][j] * omega_up[l];
      }
  return d;
}

/// max |Gamma^l_ij - Gamma^l_ji|.
inline double torsion_residual(const WeylPointData& d) {
  double worst = 0.0;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        worst = std::max(worst, std::abs(d.gamma[l][i][j].value - d.gamma[l][j][i].value));
  return worst;
}

/// max over components of |(D_k g)_ij + 2 omega_k g_ij|.
inline double metricity_residual(const WeylStructure3& w, const Point<3>& p) {
  const WeylGauge gauge = w.at(p);
  const WeylPointData d = weyl_connection(w, p);
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        double v = gauge.g[i][j].grad[k] + 2.0 * d.omega[k].value * d.g[i][j];
        for (std::size_t m = 0; m < 3; ++m)
          v -= d.gamma[m][k][i].value * d.g[m][j] + d.gamma[m][k][j].value * d.g[i][m];
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

struct RicciWeyl {
  Mat<double, 3> ricci{};           ///< full (nonsymmetric) Ricci of D
  Mat<double, 3> sym_tracefree{};
  double scal = 0.0;                ///< scal^D in the active gauge
  double tracefree_norm = 0.0;      ///< gauge norm of sym_tracefree
};

inline RicciWeyl ricci_weyl(const WeylPointData& d) {
  RicciWeyl out;
  out.ricci = ricci_from_riemann<3>(riemann_from_connection<3>(d.gamma));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.scal += d.ginv[i][j] * out.ricci[i][j];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.sym_tracefree[i][j] = 0.5 * (out.ricci[i][j] + out.ricci[j][i]) - out.scal / 3.0 * d.g[i][j];
  out.tracefree_norm = norm2_tensor<3>(out.sym_tracefree, d.ginv);
  return out;
}

inline RicciWeyl ricci_weyl(const WeylStructure3& w, const Point<3>& p) { return ricci_weyl(weyl_connection(w, p)); }

/// F^D = d(omega) as an antisymmetric matrix F[i][j].
inline Mat<double, 3> faraday(const WeylPointData& d) {
  Mat<double, 3> f{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) f[i][j] = d.omega[j].grad[i] - d.omega[i].grad[j];
  return f;
}

inline Mat<double, 3> faraday(const WeylStructure3& w, const Point<3>& p) { return faraday(weyl_connection(w, p)); }

/// Hodge star of a 2-form (antisymmetric matrix) to a 1-form.
inline Vec<double, 3> hodge_2form(const Mat<double, 3>& f, const WeylPointData& d) {
  Mat<double, 3> up{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) up[j][k] += d.ginv[j][a] * d.ginv[k][b] * f[a][b];
  Vec<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) out[i] += 0.5 * levi_civita(i, j, k) * up[j][k];
  for (auto& v : out) v *= d.orientation * d.sqrt_det.value;
  return out;
}

/// Hodge star of a 1-form to a 2-form.
inline Mat<double, 3> hodge_1form(const Vec<double, 3>& a, const WeylPointData& d) {
  Vec<double, 3> up{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) up[i] += d.ginv[i][j] * a[j];
  Mat<double, 3> out{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) {
      double v = 0.0;
      for (std::size_t i = 0; i < 3; ++i) v += levi_civita(i, j, k) * up[i];
      out[j][k] = d.orientation * d.sqrt_det.value * v;
    }
  return out;
}

/// Oriented cross product of vectors, (X x Y)^l = vol(., X, Y)^#.
inline Vec<double, 3> cross(const Vec<double, 3>& x, const Vec<double, 3>& y, const WeylPointData& d) {
  Vec<double, 3> low{};
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) low[m] += levi_civita(m, i, j) * x[i] * y[j];
  Vec<double, 3> out{};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m) out[l] += d.ginv[l][m] * low[m];
  for (auto& v : out) v *= d.orientation * d.sqrt_det.value;
  return out;
}

inline double inner(const Vec<double, 3>& x, const Vec<double, 3>& y, const Mat<double, 3>& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += g[i][j] * x[i] * y[j];
  return s;
}

struct CongruenceData {
  double tau = 0.0;           ///< divergence
  double kappa_twist = 0.0;   ///< twist, Dchi = ... + kappa (chi x .)
  double shear_norm = 0.0;
  double geodesic_residual = 0.0;
};

/// Splits Dchi = tau (id - chi (x) chi) + kappa *chi + shear + acceleration, with
/// *chi acting as X -> chi x X. chi is realized in the gauge as a g-unit vector
/// field, so Dchi reads D_X V - omega(X) V.
inline CongruenceData congruence_invariants(const WeylStructure3& w, const VectorField<3>& chi, const Point<3>& p) {
  const WeylPointData d = weyl_connection(w, p);
  const Vec<Jet2<3>, 3> vj = chi(p);
  Vec<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = vj[i].value;
  const double len2 = inner(v, v, d.g);
  if (std::abs(len2 - 1.0) > 1e-10) throw DomainError("congruence generator is not unit length", len2);

  // a[l][i] = (Dchi)(d_i)^l
  Mat<double, 3> a{};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < 3; ++i) {
      double s = vj[l].grad[i] - d.omega[i].value * v[l];
      for (std::size_t k = 0; k < 3; ++k) s += d.gamma[l][i][k].value * v[k];
      a[l][i] = s;
    }
  auto apply = [&a](const Vec<double, 3>& x) {
    Vec<double, 3> r{};
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t i = 0; i < 3; ++i) r[l] += a[l][i] * x[i];
    return r;
  };

  // pick the coordinate direction least aligned with chi, project and normalize
  std::size_t best = 0;
  double best_align = 2.0;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec<double, 3> ek{};
    ek[k] = 1.0;
    const double align = std::abs(inner(ek, v, d.g)) / std::sqrt(d.g[k][k]);
    if (align < best_align) {
      best_align = align;
      best = k;
    }
  }
  Vec<double, 3> e1{};
  e1[best] = 1.0;
  const double proj = inner(e1, v, d.g);
  for (std::size_t i = 0; i < 3; ++i) e1[i] -= proj * v[i];
  const double n1 = std::sqrt(inner(e1, e1, d.g));
  for (auto& c : e1) c /= n1;
  const Vec<double, 3> e2 = cross(v, e1, d);

  const Vec<double, 3> ae1 = apply(e1);
  const Vec<double, 3> ae2 = apply(e2);
  const double m11 = inner(e1, ae1, d.g);
  const double m12 = inner(e1, ae2, d.g);
  const double m21 = inner(e2, ae1, d.g);
  const double m22 = inner(e2, ae2, d.g);

  CongruenceData out;
  out.tau = 0.5 * (m11 + m22);
  out.kappa_twist = 0.5 * (m21 - m12);
  const double s11 = 0.5 * (m11 - m22);
  const double s12 = 0.5 * (m12 + m21);
  out.shear_norm = std::sqrt(2.0 * s11 * s11 + 2.0 * s12 * s12);
  out.geodesic_residual = std::sqrt(std::max(0.0, inner(apply(v), apply(v), d.g)));
  return out;
}

/// kappa^2 = c scal^D / 6 holds with c = 1 under the curvature convention of
/// tensor.hpp (round S^3 of radius 1 has Ricci = 2g).
inline constexpr double kScalKappaConstant = 1.0;

struct HyperCRResidual {
  double r1 = 0.0;  ///< |kappa^2 - c scal^D/6|, c = kScalKappaConstant
  double r2 = 0.0;  ///< |D kappa + 1/2 *F^D|
  double scal = 0.0;
  double kappa = 0.0;
};

/// kappa is a section of L^{-1}: in the gauge D kappa = d kappa - kappa omega.
inline HyperCRResidual hypercr_residual(const WeylStructure3& w, const JetField<3>& kappa_eval, const Point<3>& p) {
  const WeylPointData d = weyl_connection(w, p);
  const RicciWeyl ric = ricci_weyl(d);
  const Jet2<3> kappa = kappa_eval(p);
  const Vec<double, 3> star_f = hodge_2form(faraday(d), d);
  Vec<double, 3> res{};
  for (std::size_t i = 0; i < 3; ++i) res[i] = kappa.grad[i] - kappa.value * d.omega[i].value + 0.5 * star_f[i];
  HyperCRResidual out;
  out.scal = ric.scal;
  out.kappa = kappa.value;
  out.r1 = std::abs(kappa.value * kappa.value - kScalKappaConstant * ric.scal / 6.0);
  out.r2 = norm_covector<3>(res, d.ginv);
  return out;
}

/// Curvature norm of nabla_X Y = D_X Y + sign * kappa * (X x Y) on L^{-1} (x) TB.
inline double flat_connection_residual(const WeylStructure3& w, const JetField<3>& kappa_eval, int sign,
                                       const Point<3>& p) {
  const WeylPointData d = weyl_connection(w, p);
  const Jet1<3> kappa = kappa_eval(p).truncate();
  const Jet1<3> vol = static_cast<double>(d.orientation) * d.sqrt_det;
  // coefficients laid out [fiber out][direction][fiber in]
  Christoffel<3> conn = d.gamma;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Jet1<3>& c = conn[l][i][j];
        if (l == j) c -= d.omega[i];
        Jet1<3> eps_up;
        for (std::size_t m = 0; m < 3; ++m) {
          const int e = levi_civita(m, i, j);
          if (e != 0) eps_up += static_cast<double>(e) * d.ginv_jet[l][m];
        }
        c += static_cast<double>(sign) * (kappa * vol * eps_up);
      }
  const Riemann<3> r = riemann_from_connection<3>(conn);
  double s = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t e = 0; e < 3; ++e)
          for (std::size_t a2 = 0; a2 < 3; ++a2)
            for (std::size_t b2 = 0; b2 < 3; ++b2)
              for (std::size_t c2 = 0; c2 < 3; ++c2)
                for (std::size_t e2 = 0; e2 < 3; ++e2)
                  s += d.g[a][a2] * d.ginv[b][b2] * d.ginv[c][c2] * d.ginv[e][e2] * r[a][b][c][e] *
                       r[a2][b2][c2][e2];
  return std::sqrt(std::max(0.0, s));
}

/// g -> e^{2 phi} g. Dg = -2 omega (x) g forces omega -> omega - d phi.
inline WeylStructure3 gauge_transform(const WeylStructure3& w, const JetField<3>& phi) {
  WeylStructure3 out = w;
  out.eval = [base = w.eval, phi](const Point<3>& p) {
    WeylGauge gauge = base(p);
    const Jet2<3> ph = phi(p);
    const Jet2<3> factor = exp(2.0 * ph);
    for (auto& row : gauge.g)
      for (auto& c : row) c = factor * c;
    for (std::size_t i = 0; i < 3; ++i) gauge.omega[i] -= ph.d(i);
    return gauge;
  };
  return out;
}

/// Weight-(-1) quantities rescale by e^{-phi} under gauge_transform.
inline JetField<3> gauge_weighted(const JetField<3>& f, const JetField<3>& phi, int weight) {
  return [f, phi, weight](const Point<3>& p) { return f(p) * exp(static_cast<double>(weight) * phi(p)); };
}

}  // namespace ewtoda
