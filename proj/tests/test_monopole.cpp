#include <gtest/gtest.h>

#include <cmath>

#include "ewtoda/families3.hpp"
#include "ewtoda/monopole.hpp"

using namespace ewtoda;

namespace {

const Point<3> kPoints[] = {{0.3, 0.2, 1.1}, {-0.7, 0.5, 0.6}, {1.2, -0.9, 2.4}, {0.4, 1.3, 0.3}};

// |*(dw - omega w) - d theta| with theta's dz component replaced by v
double theta_residual_with(const HoloFn& h, const HoloFn& f, const Point<3>& p, double v_sign) {
  const WeylPointData d = weyl_connection(theorem1_structure(h), p);
  const MonopoleData<3> m = strachan_monopole<3>(h, f, p);
  const Jet2<3> v = v_sign * m.v;
  const Vec<Jet2<3>, 3> theta{m.theta[0], m.theta[1], v};
  Vec<double, 3> dw{};
  for (std::size_t i = 0; i < 3; ++i) dw[i] = m.w.grad[i] - d.omega[i].value * m.w.value;
  const Mat<double, 3> lhs = hodge_1form(dw, d);
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(lhs[i][j] - (theta[j].grad[i] - theta[i].grad[j])));
  return worst;
}

}  // namespace

TEST(Monopole, ConstantOnePlusI) {
  // f = h = 1+i, z = 1: w = Re((1+i)/(2+i)) = 3/5
  const HoloFn c = HoloFn::constant({1.0, 1.0});
  const MonopoleData<3> m = strachan_monopole<3>(c, c, {0.5, 0.5, 1.0});
  EXPECT_NEAR(m.w.value, 0.6, 1e-15);
}

TEST(Monopole, ImaginaryUnit) {
  // f = h = i, z = 1: f/(z+h) = i/(1+i) = (1+i)/2, so w = 1/2 and the closed-form v is -1/2
  const HoloFn c = HoloFn::constant({0.0, 1.0});
  const Point<3> p{1.0, 0.0, 1.0};
  const MonopoleData<3> m = strachan_monopole<3>(c, c, p);
  EXPECT_NEAR(m.w.value, 0.5, 1e-15);
  EXPECT_NEAR(m.v.value, 0.5, 1e-15);
  // with f = i the monopole is the hyperCR section kappa
  EXPECT_NEAR(m.w.value, hypercr_toda_family(c).kappa(p).value, 1e-15);
}

// Regression for kMonopoleVSign: only the frozen sign gives *(dw - omega w) = d theta.
TEST(FrozenSigns, MonopoleVSign) {
  ASSERT_EQ(kMonopoleVSign, -1);
  const HoloFn h = HoloFn::parse("poly:1,0.5+0.5i");
  const HoloFn f = HoloFn::parse("poly:0.3-1i,0,0.2");
  for (const Point<3>& p : kPoints) {
    EXPECT_LT(theta_residual_with(h, f, p, 1.0), 1e-10);
    EXPECT_GT(theta_residual_with(h, f, p, -1.0), 1e-3);
  }
}

TEST(Monopole, ThetaResidual) {
  const HoloFn hs[] = {HoloFn::parse("const:1+1i"), HoloFn::parse("poly:2,0.5"), HoloFn::parse("poly:1.5,0-0.3i,0.2")};
  const HoloFn fs[] = {HoloFn::parse("const:1"), HoloFn::parse("const:0+1i"), HoloFn::parse("poly:0.5,1-1i")};
  for (const HoloFn& h : hs)
    for (const HoloFn& f : fs)
      for (const Point<3>& p : kPoints) EXPECT_LT(theta_residual(h, f, p), 1e-10) << h.to_string() << " " << f.to_string();
}

TEST(Monopole, LinearEquation) {
  const HoloFn hs[] = {HoloFn::parse("const:1+1i"), HoloFn::parse("poly:2,0.5"), HoloFn::parse("poly:1.5,0-0.3i,0.2")};
  const HoloFn fs[] = {HoloFn::parse("const:1"), HoloFn::parse("poly:0,1"), HoloFn::parse("ratio:poly:1/poly:3,1")};
  for (const HoloFn& h : hs) {
    const HyperCRTodaFamily fam = hypercr_toda_family(h);
    for (const HoloFn& f : fs) {
      const JetField<3> w = [h, f](const Point<3>& p) { return strachan_monopole<3>(h, f, p).w; };
      for (const Point<3>& p : kPoints) EXPECT_LT(std::abs(monopole_residual(fam.u, w, p)), 1e-10);
    }
  }
}

TEST(Monopole, UzIsAMonopole) {
  const HoloFn h = HoloFn::parse("poly:2,0.5-0.5i");
  const HyperCRTodaFamily fam = hypercr_toda_family(h);
  const JetField<3> closed = [h](const Point<3>& p) { return theorem1_u_z<3>(h, p); };
  for (const Point<3>& p : kPoints) {
    EXPECT_NEAR(closed(p).value, fam.u(p).grad[2], 1e-13);
    EXPECT_LT(std::abs(monopole_residual(fam.u, closed, p)), 1e-10);
  }
}

TEST(Monopole, NonMonopoleDetected) {
  const HyperCRTodaFamily fam = hypercr_toda_family(HoloFn::parse("poly:2,0.5"));
  const JetField<3> z2 = [](const Point<3>& p) {
    const Jet2<3> z = seed_coordinate<3>(2, p[2]);
    return z * z;
  };
  EXPECT_GT(std::abs(monopole_residual(fam.u, z2, {0.3, 0.2, 1.1})), 1e-2);
}

TEST(Monopole, SpecialIdentities) {
  // f = a h + b: w = a(1 - z u_z/2) + b u_z/2
  for (const HoloFn& h : {HoloFn::parse("poly:2,1"), HoloFn::parse("poly:1+1i,0,0.3")})
    for (const auto& [a, b] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{2.0, -1.0}})
      for (const Point<3>& p : kPoints) EXPECT_LT(special_monopole_identity(h, a, b, p), 1e-13);
}

TEST(Monopole, PositivityMargin) {
  // z + h = 0 at zeta = 0, z = 1 for h = -1
  EXPECT_THROW(strachan_monopole<3>(HoloFn::constant(-1.0), HoloFn::constant(1.0), {0.3, 0.0, 1.0}), DomainError);
}
