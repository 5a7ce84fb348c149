#include <gtest/gtest.h>

#include <cmath>

#include "ewtoda/curvature4.hpp"
#include "ewtoda/metrics4.hpp"
#include "ewtoda/oracles.hpp"

using namespace ewtoda;

namespace {

// Product of two surfaces of constant curvature k1, k2 in stereographic charts (x, y) and (z, t).
Metric4 product_surfaces(double k1, double k2) {
  Metric4 m;
  m.eval = [k1, k2](const Point<4>& p) {
    const auto c = seed_point<4>(p);
    const Jet2<4> q1 = 1.0 + k1 * (c[0] * c[0] + c[1] * c[1]);
    const Jet2<4> q2 = 1.0 + k2 * (c[2] * c[2] + c[3] * c[3]);
    const Jet2<4> f1 = 4.0 / (q1 * q1);
    const Jet2<4> f2 = 4.0 / (q2 * q2);
    Mat<Jet2<4>, 4> g;
    for (auto& row : g)
      for (auto& e : row) e = Jet2<4>(0.0);
    g[0][0] = f1;
    g[1][1] = f1;
    g[2][2] = f2;
    g[3][3] = f2;
    return g;
  };
  return m;
}

const Point<4> kPoints[] = {{0.1, 0.2, 0.3, 0.4}, {-0.5, 0.3, 0.2, -0.1}, {0.2, -0.4, -0.3, 0.25}};

}  // namespace

TEST(Curvature4, Flat) {
  const Curvature4 c = curvature(flat_metric4(), {0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(c.scal, 0.0);
  EXPECT_EQ(c.ricci_norm, 0.0);
  EXPECT_EQ(c.weyl_norm2, 0.0);
  EXPECT_EQ(c.weyl_sd_norm, 0.0);
  EXPECT_EQ(c.weyl_asd_norm, 0.0);
}

TEST(Curvature4, RoundFourSphere) {
  for (const Point<4>& p : kPoints) {
    const Curvature4 c = curvature(round_s4_metric(), p);
    EXPECT_LT(einstein_oracle_residual<4>(c.ricci, c.g, 3.0), 1e-12);
    EXPECT_NEAR(c.scal, 12.0, 1e-12);
    EXPECT_LT(c.weyl_norm2, 1e-24);
    EXPECT_LT(constant_curvature_residual(c), 1e-12);
  }
}

TEST(Curvature4, SphereTimesSphere) {
  // Ric = g, |Rm|^2 = 8, so |W|^2 = |Rm|^2 - 2|Ric|^2 + scal^2/3 = 16/3, split evenly
  for (const Point<4>& p : kPoints) {
    const Curvature4 c = curvature(product_surfaces(1.0, 1.0), p);
    EXPECT_LT(einstein_oracle_residual<4>(c.ricci, c.g, 1.0), 1e-12);
    EXPECT_NEAR(c.weyl_norm2, 16.0 / 3.0, 1e-12);
    EXPECT_NEAR(c.weyl_sd_norm, c.weyl_asd_norm, 1e-12);
    EXPECT_NEAR(c.weyl_sd_norm * c.weyl_sd_norm + c.weyl_asd_norm * c.weyl_asd_norm, c.weyl_norm2, 1e-12);
    EXPECT_GT(constant_curvature_residual(c), 1.0);
  }
}

TEST(Curvature4, HyperbolicPlaneTimesSphereIsConformallyFlat) {
  for (const Point<4>& p : kPoints) {
    const Curvature4 c = curvature(product_surfaces(-1.0, 1.0), p);
    EXPECT_NEAR(c.scal, 0.0, 1e-12);
    EXPECT_NEAR(c.ricci_norm, 2.0, 1e-12);
    EXPECT_LT(c.weyl_norm2, 1e-24);
  }
}

TEST(Curvature4, Identities) {
  const Metric4 metrics[] = {sfk_metric(HoloFn::parse("poly:2,0.5"), HoloFn::parse("poly:1,0.3")),
                             einstein_metric(HoloFn::parse("poly:1+0.5i,0.2")), pedersen_metric(1.0)};
  const Point<4> pts[] = {{0.3, 0.4, 1.0, 0.2}, {0.5, 0.3, 0.7, 0.1}, {0.6, 1.1, 0.3, 0.2}};
  for (std::size_t i = 0; i < 3; ++i) {
    const Curvature4 c = curvature(metrics[i], pts[i]);
    EXPECT_LT(c.symmetry_residual, 1e-12);
    EXPECT_LT(c.bianchi_residual, 1e-12);
    EXPECT_LT(c.weyl_trace_residual, 1e-12);
    EXPECT_LT(c.weyl_split_residual, 1e-12);
    EXPECT_NEAR(c.weyl_sd_norm * c.weyl_sd_norm + c.weyl_asd_norm * c.weyl_asd_norm, c.weyl_norm2,
                1e-10 * (1 + c.weyl_norm2));
  }
}

TEST(Curvature4, OrientationSwapsHalves) {
  Metric4 m = sfk_metric(HoloFn::parse("poly:2,0.5"), HoloFn::parse("poly:1,0.3"));
  const Point<4> p{0.3, 0.4, 1.0, 0.2};
  const Curvature4 a = curvature(m, p);
  m.orientation = -1;
  const Curvature4 b = curvature(m, p);
  EXPECT_NEAR(a.weyl_sd_norm, b.weyl_asd_norm, 1e-12 * (1 + a.weyl_sd_norm));
  EXPECT_NEAR(a.weyl_asd_norm, b.weyl_sd_norm, 1e-12 * (1 + a.weyl_asd_norm));
}

TEST(Curvature4, OrthonormalFrame) {
  const Mat<double, 4> g{{{2.0, 0.3, 0.0, 0.1}, {0.3, 1.5, 0.2, 0.0}, {0.0, 0.2, 1.0, 0.4}, {0.1, 0.0, 0.4, 3.0}}};
  for (const int orientation : {1, -1}) {
    const Mat<double, 4> e = detail::orthonormal_frame(g, orientation);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        double s = 0.0;
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b) s += e[a][i] * g[a][b] * e[b][j];
        EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-15);
      }
    const auto det = invert<double, 4>(e).determinant;
    EXPECT_EQ(det > 0.0 ? 1 : -1, orientation);
  }
}

TEST(Curvature4, DegenerateMetricThrows) {
  Metric4 m = flat_metric4();
  m.eval = [](const Point<4>&) {
    Mat<Jet2<4>, 4> g;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g[i][j] = Jet2<4>(i == j && i != 3 ? 1.0 : 0.0);
    return g;
  };
  EXPECT_THROW(curvature(m, {0.0, 0.0, 0.0, 0.0}), DomainError);
}

TEST(Curvature4, KillingResidual) {
  EXPECT_EQ(killing_residual(flat_metric4(), {0.1, 0.2, 0.3, 0.4}), 0.0);
  EXPECT_GT(killing_residual(round_s4_metric(), {0.1, 0.2, 0.3, 0.4}), 0.1);
}
