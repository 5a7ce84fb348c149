#include <gtest/gtest.h>

#include <cmath>

#include "ewtoda/families3.hpp"
#include "ewtoda/weyl3.hpp"

using namespace ewtoda;

namespace {

WeylStructure3 flat() {
  return toda_lw([](const Point<3>&) { return Jet2<3>(0.0); });
}

JetField<3> log_radius() {
  return [](const Point<3>& p) {
    const auto c = seed_point<3>(p);
    return 0.5 * log(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  };
}

}  // namespace

TEST(Weyl3, FlatHasZeroConnectionAndCurvature) {
  const Point<3> p{0.3, -0.2, 1.4};
  const WeylPointData d = weyl_connection(flat(), p);
  for (const auto& a : d.gamma)
    for (const auto& b : a)
      for (const auto& c : b) EXPECT_EQ(c.value, 0.0);
  const RicciWeyl r = ricci_weyl(d);
  EXPECT_EQ(r.scal, 0.0);
  EXPECT_EQ(r.tracefree_norm, 0.0);
  EXPECT_EQ(torsion_residual(d), 0.0);
  EXPECT_EQ(metricity_residual(flat(), p), 0.0);
}

TEST(Weyl3, NonDefiniteMetricThrows) {
  const WeylStructure3 bad = toda_lw([](const Point<3>&) { return Jet2<3>(0.0); });
  WeylStructure3 neg = bad;
  neg.eval = [base = bad.eval](const Point<3>& p) {
    WeylGauge g = base(p);
    g.g[2][2] = Jet2<3>(-1.0);
    return g;
  };
  EXPECT_THROW(weyl_connection(neg, {0.0, 0.0, 1.0}), DomainError);
}

TEST(Weyl3, AdmissibilityGuardsEvaluation) {
  WeylStructure3 w = flat();
  w.admissible = [](const Point<3>& p) { return p[2] > 0.0; };
  EXPECT_THROW(weyl_connection(w, {0.0, 0.0, -1.0}), DomainError);
  EXPECT_NO_THROW(weyl_connection(w, {0.0, 0.0, 1.0}));
}

TEST(Weyl3, GaugeByLogRadius) {
  // g' = r^2 delta and omega' = -d log r
  const Point<3> p{1.0, 2.0, 2.0};
  const WeylStructure3 w = gauge_transform(flat(), log_radius());
  const WeylGauge g = w.at(p);
  EXPECT_NEAR(g.g[0][0].value, 9.0, 1e-14);
  EXPECT_EQ(g.g[0][1].value, 0.0);
  EXPECT_NEAR(g.omega[0].value, -1.0 / 9.0, 1e-16);
  EXPECT_NEAR(g.omega[1].value, -2.0 / 9.0, 1e-16);
  EXPECT_NEAR(g.omega[2].value, -2.0 / 9.0, 1e-16);
  const WeylPointData d = weyl_connection(w, p);
  EXPECT_LT(torsion_residual(d), 1e-15);
  EXPECT_LT(metricity_residual(w, p), 1e-13);
  // the connection is the flat one
  const RicciWeyl r = ricci_weyl(d);
  EXPECT_LT(r.tracefree_norm, 1e-13);
  EXPECT_LT(std::abs(r.scal), 1e-13);
}

TEST(Weyl3, ZeroGaugeIsIdentity) {
  const HoloFn h = HoloFn::parse("poly:1,0.5");
  const WeylStructure3 w = theorem1_structure(h);
  const WeylStructure3 same = gauge_transform(w, [](const Point<3>&) { return Jet2<3>(0.0); });
  const Point<3> p{0.4, 0.2, 0.9};
  const WeylGauge a = w.at(p);
  const WeylGauge b = same.at(p);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.omega[i].value, b.omega[i].value);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a.g[i][j].value, b.g[i][j].value);
  }
}

TEST(Weyl3, ScalarCurvatureHasWeightMinusTwo) {
  const HoloFn h = HoloFn::parse("poly:2,0.5+0.5i");
  const WeylStructure3 w = theorem1_structure(h);
  const JetField<3> phi = [](const Point<3>& p) {
    const auto c = seed_point<3>(p);
    return 0.3 * c[2] + 0.1 * c[0] * c[1];
  };
  const Point<3> p{0.5, -0.4, 1.3};
  const double s0 = ricci_weyl(w, p).scal;
  const double s1 = ricci_weyl(gauge_transform(w, phi), p).scal;
  EXPECT_NEAR(s1, s0 * std::exp(-2.0 * phi(p).value), 1e-12 * (1 + std::abs(s0)));
  EXPECT_LT(ricci_weyl(gauge_transform(w, phi), p).tracefree_norm, 1e-10);
}

TEST(Weyl3, FaradayOfLeBrunWardGauge) {
  // omega = -u_z dz gives F_xz = -u_zx, F_yz = -u_zy, F_xy = 0
  const JetField<3> u = [](const Point<3>& p) {
    const auto c = seed_point<3>(p);
    return sin(c[0]) * c[2] * c[2] + c[1] * c[2];
  };
  const Point<3> p{0.7, 0.1, 1.5};
  const Mat<double, 3> f = faraday(toda_lw(u), p);
  const Jet2<3> uj = u(p);
  EXPECT_EQ(f[0][1], 0.0);
  EXPECT_NEAR(f[0][2], -uj.hess[2][0], 1e-15);
  EXPECT_NEAR(f[1][2], -uj.hess[2][1], 1e-15);
  EXPECT_EQ(f[2][0], -f[0][2]);
}

TEST(Weyl3, HodgeStarOnFlat) {
  const WeylPointData d = weyl_connection(flat(), {0.0, 0.0, 1.0});
  Mat<double, 3> dxdy{};
  dxdy[0][1] = 1.0;
  dxdy[1][0] = -1.0;
  const Vec<double, 3> s = hodge_2form(dxdy, d);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_EQ(s[1], 0.0);
  EXPECT_EQ(s[2], 1.0);
  const Mat<double, 3> back = hodge_1form(s, d);
  EXPECT_EQ(back[0][1], 1.0);
  EXPECT_EQ(back[1][0], -1.0);
  const Vec<double, 3> e1{1.0, 0.0, 0.0};
  const Vec<double, 3> e2{0.0, 1.0, 0.0};
  EXPECT_EQ(cross(e1, e2, d)[2], 1.0);
}

TEST(Weyl3, BergerParameter) {
  EXPECT_NEAR(berger_b(0.6), 0.48, 1e-16);
  EXPECT_EQ(berger_b(1.0), 0.0);
  EXPECT_THROW(berger_sphere(0.0), DomainError);
  EXPECT_THROW(berger_sphere(1.2), DomainError);
}

TEST(Weyl3, BergerSpheresAreEinsteinWeyl) {
  for (const double a : {0.2, 0.5, 0.6, 0.8, 0.95, 1.0}) {
    const WeylStructure3 w = berger_sphere(a);
    for (const Point<3> p : {Point<3>{0.4, 0.1, 2.0}, Point<3>{1.3, -2.0, 0.5}, Point<3>{2.5, 3.0, -1.0}}) {
      const WeylPointData d = weyl_connection(w, p);
      EXPECT_LT(ricci_weyl(d).tracefree_norm, 1e-11) << "a=" << a;
      EXPECT_LT(torsion_residual(d), 1e-15);
      EXPECT_LT(metricity_residual(w, p), 1e-13);
    }
  }
}

TEST(Weyl3, BergerWithoutGaugeTermIsNotEinsteinWeyl) {
  WeylStructure3 w = berger_sphere(0.6);
  w.eval = [base = w.eval](const Point<3>& p) {
    WeylGauge g = base(p);
    g.omega = {Jet1<3>(0.0), Jet1<3>(0.0), Jet1<3>(0.0)};
    return g;
  };
  EXPECT_GT(ricci_weyl(w, {0.7, 0.2, 0.3}).tracefree_norm, 0.1);
}

TEST(Weyl3, RoundBergerIsRadiusTwoSphere) {
  // a = 1: Euler-angle metric of the sphere of radius 2, Ricci = (2/4) g
  const WeylPointData d = weyl_connection(berger_sphere(1.0), {0.9, 0.3, 0.2});
  const RicciWeyl r = ricci_weyl(d);
  EXPECT_NEAR(r.scal, 1.5, 1e-13);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(r.ricci[i][j], 0.5 * d.g[i][j], 1e-13);
}

TEST(Congruence, FlatVertical) {
  const VectorField<3> ez = [](const Point<3>&) {
    return Vec<Jet2<3>, 3>{Jet2<3>(0.0), Jet2<3>(0.0), Jet2<3>(1.0)};
  };
  const CongruenceData c = congruence_invariants(flat(), ez, {0.1, 0.2, 0.3});
  EXPECT_EQ(c.tau, 0.0);
  EXPECT_EQ(c.kappa_twist, 0.0);
  EXPECT_EQ(c.shear_norm, 0.0);
  EXPECT_EQ(c.geodesic_residual, 0.0);
}

TEST(Congruence, FlatRadial) {
  // x/|x|: divergence 2/r split as tau = 1/r, no twist, no shear, geodesic
  const VectorField<3> radial = [](const Point<3>& p) {
    const auto c = seed_point<3>(p);
    const Jet2<3> r = sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    return Vec<Jet2<3>, 3>{c[0] / r, c[1] / r, c[2] / r};
  };
  const Point<3> p{1.0, 2.0, 2.0};
  const CongruenceData c = congruence_invariants(flat(), radial, p);
  EXPECT_NEAR(c.tau, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.kappa_twist, 0.0, 1e-15);
  EXPECT_NEAR(c.shear_norm, 0.0, 1e-15);
  EXPECT_NEAR(c.geodesic_residual, 0.0, 1e-15);
}

TEST(Congruence, FlatRigidRotationTwist) {
  // unit field (-y, x, 1)/sqrt(1 + r^2) has twist; evaluated on the axis it is 1/2 curl
  const VectorField<3> helix = [](const Point<3>& p) {
    const auto c = seed_point<3>(p);
    const Jet2<3> n = sqrt(1.0 + c[0] * c[0] + c[1] * c[1]);
    return Vec<Jet2<3>, 3>{-c[1] / n, c[0] / n, Jet2<3>(1.0) / n};
  };
  const CongruenceData c = congruence_invariants(flat(), helix, {0.0, 0.0, 0.5});
  EXPECT_NEAR(std::abs(c.kappa_twist), 1.0, 1e-15);
  EXPECT_NEAR(c.tau, 0.0, 1e-15);
}

TEST(Congruence, NonUnitGeneratorThrows) {
  const VectorField<3> twice = [](const Point<3>&) {
    return Vec<Jet2<3>, 3>{Jet2<3>(0.0), Jet2<3>(0.0), Jet2<3>(2.0)};
  };
  EXPECT_THROW(congruence_invariants(flat(), twice, {0.0, 0.0, 1.0}), DomainError);
}
