#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "ewtoda/jet.hpp"

namespace ewtoda {

template <typename T, std::size_t N>
using Mat = std::array<std::array<T, N>, N>;

template <typename T, std::size_t N>
using Vec = std::array<T, N>;

/// Connection coefficients Gamma[l][i][j] = Gamma^l_ij, with D_{d_i} d_j = Gamma^l_ij d_l.
template <std::size_t N>
using Christoffel = std::array<Mat<Jet1<N>, N>, N>;

/// R[a][b][c][d] = R^a_bcd with R(d_c, d_d) d_b = R^a_bcd d_a.
template <std::size_t N>
using Riemann = std::array<std::array<Mat<double, N>, N>, N>;

inline double value_of(double x) { return x; }
template <std::size_t N>
double value_of(const Jet1<N>& x) { return x.value; }
template <std::size_t N>
double value_of(const Jet2<N>& x) { return x.value; }

inline double inverse(double x) {
  if (x == 0.0) throw DomainError("division by zero", x);
  return 1.0 / x;
}

template <std::size_t N>
Mat<double, N> values(const Mat<Jet2<N>, N>& m) {
  Mat<double, N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = m[i][j].value;
  return r;
}

template <std::size_t N>
Mat<Jet1<N>, N> truncate(const Mat<Jet2<N>, N>& m) {
  Mat<Jet1<N>, N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = m[i][j].truncate();
  return r;
}

template <typename T, std::size_t N>
struct InverseResult {
  Mat<T, N> inverse;
  T determinant;
};

/// Gauss-Jordan without pivoting; meant for the positive definite matrices of
/// this library, where every leading minor is positive.
template <typename T, std::size_t N>
InverseResult<T, N> invert(Mat<T, N> a) {
  Mat<T, N> inv{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) inv[i][j] = T(0.0);
    inv[i][i] = T(1.0);
  }
  T det(1.0);
  for (std::size_t c = 0; c < N; ++c) {
    const T pivot = a[c][c];
    if (!(std::abs(value_of(pivot)) > 1e-300)) throw DomainError("degenerate metric", value_of(pivot));
    det = det * pivot;
    const T s = inverse(pivot);
    for (std::size_t j = 0; j < N; ++j) {
      a[c][j] = a[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      const T f = a[r][c];
      for (std::size_t j = 0; j < N; ++j) {
        a[r][j] = a[r][j] - f * a[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return {inv, det};
}

/// Permutation sign of (i, j, k) or (i, j, k, l); 0 on repeated indices.
inline int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  return static_cast<int>((static_cast<long>(j) - static_cast<long>(i)) *
                          (static_cast<long>(k) - static_cast<long>(i)) *
                          (static_cast<long>(k) - static_cast<long>(j)) / 2);
}

inline int levi_civita(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::array<std::size_t, 4> p{i, j, k, l};
  int sign = 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  return sign;
}

/// Levi-Civita connection of g; ginv is the order-1 inverse metric.
template <std::size_t N>
Christoffel<N> levi_civita_connection(const Mat<Jet2<N>, N>& g, const Mat<Jet1<N>, N>& ginv) {
  // dg[k][i][j] = d_k g_ij as an order-1 jet
  std::array<Mat<Jet1<N>, N>, N> dg{};
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) dg[k][i][j] = g[i][j].d(k);

  Christoffel<N> gamma{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      // lowered symbols Gamma_{m i j}
      Vec<Jet1<N>, N> low{};
      for (std::size_t m = 0; m < N; ++m) low[m] = 0.5 * (dg[i][m][j] + dg[j][m][i] - dg[m][i][j]);
      for (std::size_t l = 0; l < N; ++l) {
        Jet1<N> acc;
        for (std::size_t m = 0; m < N; ++m) acc += ginv[l][m] * low[m];
        gamma[l][i][j] = acc;
        gamma[l][j][i] = acc;
      }
    }
  }
  return gamma;
}

/// Curvature R^a_bcd of a connection on a rank-N bundle over an N-dimensional
/// chart, with R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z. The coefficients are
/// laid out as gm[a][direction][fiber]; torsion-freeness is not assumed.
template <std::size_t N>
Riemann<N> riemann_from_connection(const Christoffel<N>& gm) {
  Riemann<N> r{};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c)
        for (std::size_t d = 0; d < N; ++d) {
          double v = gm[a][d][b].grad[c] - gm[a][c][b].grad[d];
          for (std::size_t e = 0; e < N; ++e)
            v += gm[a][c][e].value * gm[e][d][b].value - gm[a][d][e].value * gm[e][c][b].value;
          r[a][b][c][d] = v;
        }
  return r;
}

/// Ric(Y, Z) = trace(X -> R(X,Y)Z); entry [d][b] is Ric(d_d, d_b) = R^c_bcd.
template <std::size_t N>
Mat<double, N> ricci_from_riemann(const Riemann<N>& r) {
  Mat<double, N> ric{};
  for (std::size_t d = 0; d < N; ++d)
    for (std::size_t b = 0; b < N; ++b) {
      double v = 0.0;
      for (std::size_t c = 0; c < N; ++c) v += r[c][b][c][d];
      ric[d][b] = v;
    }
  return ric;
}

/// sqrt(T_ij T_ab g^ia g^jb) for a covariant 2-tensor.
template <std::size_t N>
double norm2_tensor(const Mat<double, N>& t, const Mat<double, N>& ginv) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) s += ginv[i][a] * ginv[j][b] * t[i][j] * t[a][b];
  return std::sqrt(std::max(s, 0.0));
}

template <std::size_t N>
double norm_covector(const Vec<double, N>& v, const Mat<double, N>& ginv) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s += ginv[i][j] * v[i] * v[j];
  return std::sqrt(std::max(s, 0.0));
}

template <std::size_t N>
double norm_vector(const Vec<double, N>& v, const Mat<double, N>& g) {
  return norm_covector<N>(v, g);
}

}  // namespace ewtoda
