// Randomized invariants. Each generator is a small function of a seeded Rng, so
// a failure is reproduced by its trial index.

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "ewtoda/ewtoda.hpp"

using namespace ewtoda;

namespace {

constexpr int kTrials = 25;

// sum c_k x^a y^b z^c with exponents in 0..3
struct Monomial {
  double c;
  std::array<int, 3> e;
};
using Polynomial3 = std::vector<Monomial>;

Polynomial3 random_poly3(Rng& rng, int max_exponent = 3) {
  Polynomial3 p(1 + rng.next() % 6);
  for (auto& m : p) {
    m.c = rng.uniform(-2.0, 2.0);
    for (auto& e : m.e) e = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_exponent + 1));
  }
  return p;
}

double ipow(double x, int n) { return n <= 0 ? 1.0 : x * ipow(x, n - 1); }

// d^(da, db, dc) of the polynomial, from the exponents alone
double derivative(const Polynomial3& poly, const Point<3>& p, std::array<int, 3> d) {
  double s = 0.0;
  for (const auto& m : poly) {
    double t = m.c;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.e[i] < d[i]) {
        t = 0.0;
        break;
      }
      for (int k = 0; k < d[i]; ++k) t *= m.e[i] - k;
      t *= ipow(p[i], m.e[i] - d[i]);
    }
    s += t;
  }
  return s;
}

Jet2<3> jet_of(const Polynomial3& poly, const Point<3>& p) {
  const auto x = seed_point<3>(p);
  Jet2<3> s(0.0);
  for (const auto& m : poly) {
    Jet2<3> t(m.c);
    for (std::size_t i = 0; i < 3; ++i) t = t * pow(x[i], m.e[i]);
    s += t;
  }
  return s;
}

HoloFn random_rational(Rng& rng) {
  const HoloFn num = random_polynomial(rng);
  const HoloFn den = random_polynomial(rng);
  return HoloFn(num.numerator(), den.numerator());
}

Point<3> random_point3(Rng& rng) { return draw_chart_point<3>(rng, SampleDomain{}); }
Point<4> random_point4(Rng& rng) { return draw_chart_point<4>(rng, SampleDomain{}); }

template <std::size_t N>
std::vector<Point<N>> admissible_points(Rng& rng, std::size_t count, const std::function<bool(const Point<N>&)>& ok) {
  return draw_admissible<N>(rng, count, [](Rng& r) { return draw_chart_point<N>(r, SampleDomain{}); }, ok);
}

}  // namespace

TEST(Property, JetsMatchSymbolicPolynomialDerivatives) {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial3 poly = random_poly3(rng);
    const Point<3> p{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const Jet2<3> j = jet_of(poly, p);
    const double scale = 1.0 + std::abs(derivative(poly, p, {0, 0, 0}));
    EXPECT_NEAR(j.value, derivative(poly, p, {0, 0, 0}), 1e-12 * scale) << trial;
    for (std::size_t i = 0; i < 3; ++i) {
      std::array<int, 3> di{};
      di[i] = 1;
      EXPECT_NEAR(j.grad[i], derivative(poly, p, di), 1e-11 * (1 + std::abs(j.grad[i]))) << trial;
      for (std::size_t k = 0; k < 3; ++k) {
        std::array<int, 3> dik = di;
        dik[k] += 1;
        EXPECT_NEAR(j.hess[i][k], derivative(poly, p, dik), 1e-11 * (1 + std::abs(j.hess[i][k]))) << trial;
      }
    }
  }
}

TEST(Property, HoloDerivativeAndCauchyRiemann) {
  Rng rng(102);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn f = random_rational(rng);
    const Point<3> p = random_point3(rng);
    const CJet2<3> v = f.eval<3>(p);
    const Complex d = f.derivative()({p[0], p[1]});
    const double scale = 1.0 + std::abs(d);
    EXPECT_NEAR(v.re.grad[0], d.real(), 1e-12 * scale) << f.to_string();
    EXPECT_NEAR(v.im.grad[0], d.imag(), 1e-12 * scale) << f.to_string();
    EXPECT_NEAR(v.re.grad[0], v.im.grad[1], 1e-12 * scale);
    EXPECT_NEAR(v.re.grad[1], -v.im.grad[0], 1e-12 * scale);
    // the real part is harmonic
    EXPECT_NEAR(v.re.hess[0][0] + v.re.hess[1][1], 0.0, 1e-11 * (1 + std::abs(v.re.hess[0][0])));
  }
}

TEST(Property, HoloStringRoundTrip) {
  Rng rng(103);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn f = random_rational(rng);
    const HoloFn g = HoloFn::parse(f.to_string());
    EXPECT_EQ(f.numerator(), g.numerator());
    EXPECT_EQ(f.denominator(), g.denominator());
  }
}

TEST(Property, RandomPolynomialIsPositive) {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const HoloFn h = random_polynomial(rng);
    EXPECT_LE(h.numerator().size(), 4u);
    const Complex z = 1.5 * rng.unit_disc();
    EXPECT_GE(h(z).real(), 0.5 - 1e-12);
  }
}

TEST(Property, HyperCRTodaCertificate) {
  Rng rng(105);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const HyperCRTodaFamily fam = hypercr_toda_family(h);
    for (const Point<3>& p : admissible_points<3>(rng, 3, fam.structure.admissible)) {
      EXPECT_LT(std::abs(toda_residual(fam.u, p)), 1e-9) << h.to_string();
      const WeylPointData d = weyl_connection(fam.structure, p);
      EXPECT_LT(ricci_weyl(d).tracefree_norm, 1e-9) << h.to_string();
      const HyperCRResidual hc = hypercr_residual(fam.structure, fam.kappa, p);
      EXPECT_LT(hc.r1, 1e-9);
      EXPECT_LT(hc.r2, 1e-9);
      EXPECT_LT(flat_connection_residual(fam.structure, fam.kappa, kHyperCRFlatSign, p), 1e-8);
    }
  }
}

TEST(Property, GaugeCovariance) {
  // the Einstein-Weyl condition and the hyperCR equations (kappa of weight -1)
  // survive g -> e^{2 phi} g
  Rng rng(106);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn h = random_polynomial(rng);
    // a mild gauge: steep ones only measure cancellation in the gauge terms
    const Polynomial3 phi_poly = random_poly3(rng, 2);
    const double amp = 0.02;
    const JetField<3> phi = [phi_poly, amp](const Point<3>& p) { return amp * jet_of(phi_poly, p); };
    const HyperCRTodaFamily fam = hypercr_toda_family(h);
    const WeylStructure3 gauged = gauge_transform(fam.structure, phi);
    const JetField<3> kappa = gauge_weighted(fam.kappa, phi, -1);
    for (const Point<3>& p : admissible_points<3>(rng, 2, fam.structure.admissible)) {
      const RicciWeyl before = ricci_weyl(fam.structure, p);
      const RicciWeyl after = ricci_weyl(gauged, p);
      EXPECT_LT(after.tracefree_norm, 1e-8) << trial;
      EXPECT_NEAR(after.scal, before.scal * std::exp(-2.0 * phi(p).value), 1e-9 * (1 + std::abs(before.scal)));
      EXPECT_LT(metricity_residual(gauged, p), 1e-10);
      const HyperCRResidual hc = hypercr_residual(gauged, kappa, p);
      EXPECT_LT(hc.r1, 1e-8) << trial;
      EXPECT_LT(hc.r2, 1e-8) << trial;
    }
  }
}

TEST(Property, MonopolesOverTheFamily) {
  Rng rng(107);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const HoloFn f = random_polynomial(rng);
    const HyperCRTodaFamily fam = hypercr_toda_family(h);
    const JetField<3> w = [h, f](const Point<3>& p) { return strachan_monopole<3>(h, f, p).w; };
    const std::function<bool(const Point<3>&)> ok = [&](const Point<3>& p) {
      return fam.structure.is_admissible(p) && std::hypot(p[0], p[1]) > kChartEpsilon;
    };
    for (const Point<3>& p : admissible_points<3>(rng, 3, ok)) {
      EXPECT_LT(std::abs(monopole_residual(fam.u, w, p)), 1e-9) << h.to_string() << " " << f.to_string();
      EXPECT_LT(theta_residual(h, f, p), 1e-9);
    }
  }
}

TEST(Property, ScalarFlatKahlerHalves) {
  Rng rng(108);
  for (int trial = 0; trial < 10; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const HoloFn f = random_polynomial(rng);
    const Metric4 m = sfk_metric(h, f);
    for (const Point<4>& p : admissible_points<4>(rng, 2, m.admissible)) {
      const Curvature4 c = curvature(m, p);
      EXPECT_LT(std::abs(c.scal), 1e-8) << h.to_string() << " " << f.to_string();
      EXPECT_LT(vanishing_half_norm(c), 1e-8);
      EXPECT_GT(surviving_half_norm(c), 1e-6);
      EXPECT_LT(c.symmetry_residual, 1e-10);
      EXPECT_LT(c.bianchi_residual, 1e-10);
      EXPECT_LT(kahler_form_closedness(h, f, p), 1e-8);
    }
  }
}

TEST(Property, EinsteinScalarCurvature) {
  Rng rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const double a = rng.uniform(0.25, 3.0);
    const Metric4 m = einstein_rescaled(h, a);
    for (const Point<4>& p : admissible_points<4>(rng, 2, m.admissible)) {
      const Curvature4 c = curvature(m, p);
      EXPECT_NEAR(c.scal, kEinsteinScalPerA * a, 1e-8 * a) << h.to_string();
      EXPECT_LT(c.tracefree_ricci_norm, 1e-8);
      EXPECT_LT(vanishing_half_norm(c), 1e-8);
    }
  }
}

TEST(Property, QuotientIsIndependentOfHeight) {
  Rng rng(110);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const HoloFn f = random_polynomial(rng);
    const Point<3> p = random_point3(rng);
    const QuotientCheck q = quotient_check(h, f, {p[0], p[1]}, {0.3, 1.0, 2.5});
    EXPECT_LT(q.max_z_variation, 1e-10) << h.to_string() << " " << f.to_string();
    EXPECT_LT(q.match_residual, 1e-10);
  }
}

TEST(Property, FiniteDifferencesAgreeWithJets) {
  Rng rng(111);
  for (int trial = 0; trial < kTrials; ++trial) {
    const HoloFn h = random_polynomial(rng);
    const HyperCRTodaFamily fam = hypercr_toda_family(h);
    const Point<3> p = admissible_points<3>(rng, 1, fam.structure.admissible).front();
    EXPECT_LT(fd_crosscheck<3>(fam.u, p, 1e-5), 1e-5) << h.to_string();
    const Point<4> q = random_point4(rng);
    const ScalarField<4> gtt = [h](const Point<4>& x) { return sfk_metric(h, h).eval(x)[3][3]; };
    EXPECT_LT(fd_crosscheck<4>(gtt, q, 1e-5), 1e-5) << h.to_string();
  }
}
