#pragma once

// Riemannian curvature of 4-metrics given as jets: Levi-Civita connection,
// Riemann, Ricci, scalar curvature and the Weyl tensor split into self-dual and
// anti-self-dual halves under the declared orientation.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "ewtoda/jet.hpp"
#include "ewtoda/tensor.hpp"

namespace ewtoda {

struct Metric4 {
  std::function<Mat<Jet2<4>, 4>(const Point<4>&)> eval;
  std::function<bool(const Point<4>&)> admissible;
  std::array<std::string, 4> coordinates{"x", "y", "z", "t"};
  /// Sign of d0^d1^d2^d3 under the declared orientation.
  int orientation = 1;
  /// Coordinate whose coordinate field is Killing (t or psi).
  std::size_t killing_coordinate = 3;

  bool is_admissible(const Point<4>& p) const { return !admissible || admissible(p); }

  Mat<Jet2<4>, 4> at(const Point<4>& p) const {
    if (!is_admissible(p)) throw DomainError("point outside the admissible domain", p[2]);
    return eval(p);
  }
};

using Tensor4 = std::array<std::array<Mat<double, 4>, 4>, 4>;

struct Curvature4 {
  Mat<double, 4> g{};
  Mat<double, 4> ginv{};
  Tensor4 riemann{};           ///< R_abcd = g(R(d_c, d_d) d_b, d_a)
  Mat<double, 4> ricci{};
  double scal = 0.0;
  Tensor4 weyl{};
  double weyl_sd_norm = 0.0;
  double weyl_asd_norm = 0.0;
  double weyl_norm2 = 0.0;     ///< W_abcd W^abcd
  double tracefree_ricci_norm = 0.0;
  double ricci_norm = 0.0;
  // diagnostics
  double symmetry_residual = 0.0;    ///< pair antisymmetries and pair symmetry, relative
  double bianchi_residual = 0.0;     ///< first Bianchi identity, relative
  double weyl_trace_residual = 0.0;
  double weyl_split_residual = 0.0;  ///< |W - W+ - W-|, i.e. the mixed blocks
};

namespace detail {

/// Orthonormal frame E (columns) with E^T g E = I, positively oriented.
inline Mat<double, 4> orthonormal_frame(const Mat<double, 4>& g, int orientation) {
  Mat<double, 4> l{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (!(s > 0.0)) throw DomainError("metric is not positive definite", s);
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  // E = L^{-T}: solve L^T E = I column by column
  Mat<double, 4> e{};
  for (std::size_t col = 0; col < 4; ++col)
    for (std::size_t i = 4; i-- > 0;) {
      double s = (i == col) ? 1.0 : 0.0;
      for (std::size_t k = i + 1; k < 4; ++k) s -= l[k][i] * e[k][col];
      e[i][col] = s / l[i][i];
    }
  if (orientation < 0)
    for (std::size_t a = 0; a < 4; ++a) e[a][0] = -e[a][0];
  return e;
}

}  // namespace detail

inline Curvature4 curvature(const Metric4& m, const Point<4>& p) {
  const Mat<Jet2<4>, 4> gj = m.at(p);
  Curvature4 c;
  c.g = values(gj);
  const auto inv = invert<Jet1<4>, 4>(truncate(gj));
  Mat<Jet1<4>, 4> ginv_jet = inv.inverse;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c.ginv[i][j] = ginv_jet[i][j].value;

  const Christoffel<4> gamma = levi_civita_connection<4>(gj, ginv_jet);
  const Riemann<4> up = riemann_from_connection<4>(gamma);
  double rmax = 0.0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t cc = 0; cc < 4; ++cc)
        for (std::size_t d = 0; d < 4; ++d) {
          double v = 0.0;
          for (std::size_t e = 0; e < 4; ++e) v += c.g[a][e] * up[e][b][cc][d];
          c.riemann[a][b][cc][d] = v;
          rmax = std::max(rmax, std::abs(v));
        }

  const Mat<double, 4> ric = ricci_from_riemann<4>(up);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c.ricci[i][j] = 0.5 * (ric[i][j] + ric[j][i]);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c.scal += c.ginv[i][j] * c.ricci[i][j];
  Mat<double, 4> tf{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) tf[i][j] = c.ricci[i][j] - 0.25 * c.scal * c.g[i][j];
  c.tracefree_ricci_norm = norm2_tensor<4>(tf, c.ginv);
  c.ricci_norm = norm2_tensor<4>(c.ricci, c.ginv);

  const auto& r = c.riemann;
  const auto& g = c.g;
  const auto& rc = c.ricci;
  double sym = 0.0;
  double bianchi = 0.0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t cc = 0; cc < 4; ++cc)
        for (std::size_t d = 0; d < 4; ++d) {
          sym = std::max({sym, std::abs(r[a][b][cc][d] + r[b][a][cc][d]), std::abs(r[a][b][cc][d] + r[a][b][d][cc]),
                          std::abs(r[a][b][cc][d] - r[cc][d][a][b])});
          bianchi = std::max(bianchi, std::abs(r[a][b][cc][d] + r[a][cc][d][b] + r[a][d][b][cc]));
          c.weyl[a][b][cc][d] = r[a][b][cc][d] -
                                0.5 * (g[a][cc] * rc[b][d] - g[a][d] * rc[b][cc] - g[b][cc] * rc[a][d] +
                                       g[b][d] * rc[a][cc]) +
                                c.scal / 6.0 * (g[a][cc] * g[b][d] - g[a][d] * g[b][cc]);
        }
  c.symmetry_residual = sym / (1.0 + rmax);
  c.bianchi_residual = bianchi / (1.0 + rmax);

  double trace = 0.0;
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t d = 0; d < 4; ++d) {
      double s = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t cc = 0; cc < 4; ++cc) s += c.ginv[a][cc] * c.weyl[a][b][cc][d];
      trace = std::max(trace, std::abs(s));
    }
  c.weyl_trace_residual = trace / (1.0 + rmax);

  // Weyl in an oriented orthonormal frame, as an operator on 2-forms
  const Mat<double, 4> e = detail::orthonormal_frame(g, m.orientation);
  Tensor4 wf{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          double s = 0.0;
          for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
              for (std::size_t cc = 0; cc < 4; ++cc)
                for (std::size_t d = 0; d < 4; ++d)
                  s += c.weyl[a][b][cc][d] * e[a][i] * e[b][j] * e[cc][k] * e[d][l];
          wf[i][j][k][l] = s;
        }
  // basis e01, e02, e03, e23, e31, e12; the Hodge star swaps the two triples
  constexpr std::array<std::array<std::size_t, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};
  std::array<std::array<double, 6>, 6> op{};
  for (std::size_t P = 0; P < 6; ++P)
    for (std::size_t Q = 0; Q < 6; ++Q) op[P][Q] = wf[pairs[P][0]][pairs[P][1]][pairs[Q][0]][pairs[Q][1]];
  auto star = [](std::size_t P) { return (P + 3) % 6; };
  double sd = 0.0;
  double asd = 0.0;
  double mixed = 0.0;
  for (std::size_t P = 0; P < 6; ++P)
    for (std::size_t Q = 0; Q < 6; ++Q) {
      // (P+/- W P+/-)[P][Q] = (W + *W + W* + *W*)/4 with signs
      const double w00 = op[P][Q];
      const double w10 = op[star(P)][Q];
      const double w01 = op[P][star(Q)];
      const double w11 = op[star(P)][star(Q)];
      const double plus = 0.25 * (w00 + w10 + w01 + w11);
      const double minus = 0.25 * (w00 - w10 - w01 + w11);
      const double mix_pm = 0.25 * (w00 - w10 + w01 - w11);
      const double mix_mp = 0.25 * (w00 + w10 - w01 - w11);
      sd += plus * plus;
      asd += minus * minus;
      mixed += mix_pm * mix_pm + mix_mp * mix_mp;
    }
  // each 2-form component appears twice in W_ijkl W_ijkl per index pair
  c.weyl_sd_norm = std::sqrt(4.0 * sd);
  c.weyl_asd_norm = std::sqrt(4.0 * asd);
  c.weyl_split_residual = std::sqrt(4.0 * mixed) / (1.0 + rmax);
  double w2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) w2 += wf[i][j][k][l] * wf[i][j][k][l];
  c.weyl_norm2 = w2;
  return c;
}

enum class WeylHalf { self_dual, anti_self_dual };

/// The Weyl half that vanishes for the scalar-flat Kaehler, Einstein and
/// Pedersen metrics under the chart orientations dx^dy^dz^dt and
/// drho^dtheta^dphi^dpsi. Frozen by test_metrics4.cpp.
inline constexpr WeylHalf kVanishingWeylHalf = WeylHalf::self_dual;

inline double vanishing_half_norm(const Curvature4& c) {
  return kVanishingWeylHalf == WeylHalf::self_dual ? c.weyl_sd_norm : c.weyl_asd_norm;
}

inline double surviving_half_norm(const Curvature4& c) {
  return kVanishingWeylHalf == WeylHalf::self_dual ? c.weyl_asd_norm : c.weyl_sd_norm;
}

/// |R - k (g wedge g)| with k = scal/12, the constant-sectional-curvature residual.
inline double constant_curvature_residual(const Curvature4& c) {
  const double k = c.scal / 12.0;
  double s = 0.0;
  Tensor4 diff{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t cc = 0; cc < 4; ++cc)
        for (std::size_t d = 0; d < 4; ++d)
          diff[a][b][cc][d] = c.riemann[a][b][cc][d] - k * (c.g[a][cc] * c.g[b][d] - c.g[a][d] * c.g[b][cc]);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t cc = 0; cc < 4; ++cc)
        for (std::size_t d = 0; d < 4; ++d) {
          double raised = 0.0;
          for (std::size_t a2 = 0; a2 < 4; ++a2)
            for (std::size_t b2 = 0; b2 < 4; ++b2)
              for (std::size_t c2 = 0; c2 < 4; ++c2)
                for (std::size_t d2 = 0; d2 < 4; ++d2)
                  raised += c.ginv[a][a2] * c.ginv[b][b2] * c.ginv[cc][c2] * c.ginv[d][d2] * diff[a2][b2][c2][d2];
          s += raised * diff[a][b][cc][d];
        }
  return std::sqrt(std::max(0.0, s));
}

/// max |d g_ab / d x^k| over components for the Killing coordinate k.
inline double killing_residual(const Metric4& m, const Point<4>& p) {
  const Mat<Jet2<4>, 4> g = m.at(p);
  double worst = 0.0;
  for (const auto& row : g)
    for (const auto& c : row) worst = std::max(worst, std::abs(c.grad[m.killing_coordinate]));
  return worst;
}

}  // namespace ewtoda
