#pragma once

// Verification suites: for each family, draw seeded admissible points, evaluate
// every residual the family should satisfy and fold the results into a Report.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ewtoda/curvature4.hpp"
#include "ewtoda/families3.hpp"
#include "ewtoda/fd_check.hpp"
#include "ewtoda/metrics4.hpp"
#include "ewtoda/monopole.hpp"
#include "ewtoda/oracles.hpp"
#include "ewtoda/report.hpp"
#include "ewtoda/sampling.hpp"
#include "ewtoda/weyl3.hpp"

namespace ewtoda {

/// Bad parameters or configuration; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"hypercr-toda", "geodesic-symmetry", "berger", "lebrun-ward-custom",
                                              "sfk",          "einstein",          "pedersen"};
  return names;
}

/// Suite kinds beyond the families, available from config files.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"quotient", "pedersen-correspondence", "substrate"};
  return names;
}

struct SuiteSpec {
  std::string name;
  std::string family;
  /// Raw parameter strings: h, f, F, H (holo grammar or "random"), a, b, m, zs, fit_z.
  std::map<std::string, std::string> params;
  std::size_t samples = kDefaultSamples;
  /// Number of parameter draws when a parameter is "random".
  std::size_t ensemble = 1;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTolerance;
  std::map<std::string, double> tolerances;
  SampleDomain domain;
};

inline double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  if (first < last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError(key + ": expected a real number, got '" + text + "'");
  return v;
}

inline std::vector<double> parse_real_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_real(key, text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

inline HoloFn parse_holo_param(const std::string& key, const std::string& text) {
  try {
    return HoloFn::parse(text);
  } catch (const ParseError& e) {
    throw ConfigError(key + ": " + e.what() + " (parsing '" + text + "')");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

inline Report run_suite(const SuiteSpec& spec);

namespace detail {

/// Resolves the parameters of one ensemble member, drawing "random" entries.
class Resolver {
 public:
  Resolver(const SuiteSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {}

  bool has(const std::string& key) const { return spec_.params.count(key) != 0; }

  HoloFn holo(const std::string& key) {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw ConfigError("missing parameter " + key);
    const HoloFn f = it->second == "random" ? random_polynomial(rng_, 3, spec_.domain.r_max)
                                             : parse_holo_param(key, it->second);
    echo[key] = f.to_string();
    return f;
  }

  HoloFn holo_or(const std::string& key, const HoloFn& fallback) {
    if (has(key)) return holo(key);
    echo[key] = fallback.to_string();
    return fallback;
  }

  double real(const std::string& key) {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw ConfigError("missing parameter " + key);
    const double v = parse_real(key, it->second);
    echo[key] = v;
    return v;
  }

  double real_or(const std::string& key, double fallback) {
    if (has(key)) return real(key);
    echo[key] = fallback;
    return fallback;
  }

  std::vector<double> reals_or(const std::string& key, std::vector<double> fallback) {
    const auto it = spec_.params.find(key);
    std::vector<double> v = it == spec_.params.end() ? std::move(fallback) : parse_real_list(key, it->second);
    echo[key] = v;
    return v;
  }

  const SuiteSpec& spec() const { return spec_; }
  Rng& rng() { return rng_; }

  Json echo = Json::object();

 private:
  const SuiteSpec& spec_;
  Rng& rng_;
};

inline std::function<bool(const Point<3>&)> guarded(std::function<bool(const Point<3>&)> pred) {
  return [pred = std::move(pred)](const Point<3>& p) {
    try {
      return pred(p);
    } catch (const DomainError&) {
      return false;
    }
  };
}

inline std::function<bool(const Point<4>&)> guarded4(std::function<bool(const Point<4>&)> pred) {
  return [pred = std::move(pred)](const Point<4>& p) {
    try {
      return pred(p);
    } catch (const DomainError&) {
      return false;
    }
  };
}

/// Theorem-1 positivity plus the z + Re h > 0 branch of the chart.
inline bool hypercr_sample_admissible(const HoloFn& h, const Point<3>& p) {
  const Complex hv = h(Complex{p[0], p[1]});
  return std::norm(Complex{p[2], 0.0} + hv) > kPositivityMargin && p[2] + hv.real() > kPositivityMargin;
}

inline VectorField<3> unit_coordinate_field(std::size_t k) {
  return [k](const Point<3>&) {
    Vec<Jet2<3>, 3> v{Jet2<3>(0.0), Jet2<3>(0.0), Jet2<3>(0.0)};
    v[k] = Jet2<3>(1.0);
    return v;
  };
}

/// Componentwise max of |a - b| / (1 + |a|) over values and derivatives.
inline double gauge_difference(const WeylGauge& a, const WeylGauge& b) {
  double worst = 0.0;
  auto rel = [&worst](double x, double y) { worst = std::max(worst, std::abs(x - y) / (1.0 + std::abs(x))); };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      rel(a.g[i][j].value, b.g[i][j].value);
      for (std::size_t k = 0; k < 3; ++k) {
        rel(a.g[i][j].grad[k], b.g[i][j].grad[k]);
        for (std::size_t l = 0; l < 3; ++l) rel(a.g[i][j].hess[k][l], b.g[i][j].hess[k][l]);
      }
    }
    rel(a.omega[i].value, b.omega[i].value);
    for (std::size_t k = 0; k < 3; ++k) rel(a.omega[i].grad[k], b.omega[i].grad[k]);
  }
  return worst;
}

inline double metric_difference(const Mat<Jet2<4>, 4>& a, const Mat<Jet2<4>, 4>& b) {
  double worst = 0.0;
  auto rel = [&worst](double x, double y) { worst = std::max(worst, std::abs(x - y) / (1.0 + std::abs(x))); };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      rel(a[i][j].value, b[i][j].value);
      for (std::size_t k = 0; k < 4; ++k) {
        rel(a[i][j].grad[k], b[i][j].grad[k]);
        for (std::size_t l = 0; l < 4; ++l) rel(a[i][j].hess[k][l], b[i][j].hess[k][l]);
      }
    }
  return worst;
}

inline bool is_real_constant(const HoloFn& f) { return f.is_constant() && f(Complex{0.0, 0.0}).imag() == 0.0; }

inline bool is_constant_one(const HoloFn& f) { return f.is_constant() && f(Complex{0.0, 0.0}) == Complex{1.0, 0.0}; }

template <std::size_t N>
std::vector<double> coords_of(const Point<N>& p) {
  return {p.begin(), p.end()};
}

inline Point<3> draw_xyt(Rng& rng, const SampleDomain& d) {
  const Point<4> p = draw_chart_point<4>(rng, d);
  return {p[0], p[1], p[3]};
}

inline Point<3> draw_euler(Rng& rng) {
  return {rng.uniform(0.2, std::numbers::pi - 0.2), rng.uniform(0.0, 2.0 * std::numbers::pi),
          rng.uniform(0.0, 2.0 * std::numbers::pi)};
}

inline Point<4> draw_ball(Rng& rng) {
  return {rng.uniform(0.05, 0.95), rng.uniform(0.2, std::numbers::pi - 0.2), rng.uniform(0.0, 2.0 * std::numbers::pi),
          rng.uniform(0.0, 2.0 * std::numbers::pi)};
}

inline std::vector<Point<3>> draw3(Resolver& r, std::function<Point<3>(Rng&)> draw,
                                   std::function<bool(const Point<3>&)> pred) {
  return draw_admissible<3>(r.rng(), r.spec().samples, draw, guarded(std::move(pred)));
}

inline std::vector<Point<4>> draw4(Resolver& r, std::function<Point<4>(Rng&)> draw,
                                   std::function<bool(const Point<4>&)> pred) {
  return draw_admissible<4>(r.rng(), r.spec().samples, draw, guarded4(std::move(pred)));
}

/// Residuals shared by every 4-metric suite.
inline void curvature_residuals(const Curvature4& c, std::map<std::string, double>& out) {
  out["weyl_half"] = vanishing_half_norm(c);
  out["symmetry"] = c.symmetry_residual;
  out["bianchi"] = c.bianchi_residual;
  out["weyl_trace"] = c.weyl_trace_residual;
  out["weyl_split"] = c.weyl_split_residual;
}

/// Standard deviation of the scalar curvature and its positive part, for the
/// Einstein suites.
inline void scal_summary(const std::vector<double>& scal, Report& report, double a) {
  double mean = 0.0;
  for (const double s : scal) mean += s;
  mean /= static_cast<double>(scal.size());
  double var = 0.0;
  double worst_sign = 0.0;
  for (const double s : scal) {
    var += (s - mean) * (s - mean);
    worst_sign = std::max(worst_sign, s);
  }
  report.add_scalar("scal_stddev", std::sqrt(var / static_cast<double>(scal.size())));
  report.add_scalar("scal_nonnegative_part", worst_sign);
  Json& rec = report.recorded;
  rec["scal_mean"].push_back(mean);
  if (a > 0.0) rec["scal_ratio_to_minus_3a"].push_back(mean / (-3.0 * a));
}

// ---- families ----

inline void run_hypercr_toda(Resolver& r, Report& report, int member) {
  const HoloFn h = r.holo("h");
  const HyperCRTodaFamily fam = hypercr_toda_family(h);
  const WeylStructure3 lw = toda_lw(fam.u);
  const WeylStructure3& st = fam.structure;
  const JetField<3> u_z = [h](const Point<3>& p) { return theorem1_u_z<3>(h, p); };
  const JetField<3> w_dilation = [h](const Point<3>& p) {
    return 1.0 - 0.5 * seed_coordinate<3>(2, p[2]) * theorem1_u_z<3>(h, p);
  };
  const JetField<3> phi = [](const Point<3>& p) { return 0.3 * seed_coordinate<3>(2, p[2]); };
  const WeylStructure3 gauged = gauge_transform(st, phi);
  const JetField<3> kappa_gauged = gauge_weighted(fam.kappa, phi, -1);
  const bool real_constant = is_real_constant(h);
  const auto pts = draw3(
      r, [&r](Rng& g) { return draw_chart_point<3>(g, r.spec().domain); },
      [&](const Point<3>& p) { return st.is_admissible(p) && hypercr_sample_admissible(h, p); });
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const WeylPointData d = weyl_connection(st, p);
    const RicciWeyl ric = ricci_weyl(d);
    const HyperCRResidual hc = hypercr_residual(st, fam.kappa, p);
    const CongruenceData cg = congruence_invariants(st, unit_coordinate_field(2), p);
    res["toda"] = toda_residual(fam.u, p);
    res["einstein_weyl"] = ric.tracefree_norm;
    res["torsion"] = torsion_residual(d);
    res["metricity"] = metricity_residual(st, p);
    res["r1"] = hc.r1;
    res["r2"] = hc.r2;
    res["flat_connection"] = flat_connection_residual(st, fam.kappa, kHyperCRFlatSign, p);
    res["twist"] = cg.kappa_twist;
    res["shear"] = cg.shear_norm;
    res["geodesic"] = cg.geodesic_residual;
    res["lw_agreement"] = gauge_difference(st.eval(p), lw.eval(p));
    res["monopole_u_z"] = monopole_residual(fam.u, u_z, p);
    res["monopole_dilation"] = monopole_residual(fam.u, w_dilation, p);
    res["special_1_0"] = special_monopole_identity(h, 1.0, 0.0, p);
    res["special_0_1"] = special_monopole_identity(h, 0.0, 1.0, p);
    res["special_2_m1"] = special_monopole_identity(h, 2.0, -1.0, p);
    res["einstein_weyl_gauged"] = ricci_weyl(gauged, p).tracefree_norm;
    res["r2_gauged"] = hypercr_residual(gauged, kappa_gauged, p).r2;
    if (real_constant) {
      res["kappa"] = hc.kappa;
      res["scal_D"] = hc.scal;
    }
    report.add_point(std::move(rec));
  }
}

inline void run_lebrun_ward(Resolver& r, Report& report, int member) {
  const HoloFn h = r.holo("h");
  const double a = r.real_or("a", 1.0);
  const HoloFn F = r.holo_or("F", HoloFn::identity());
  const bool with_f = r.has("f");
  const HoloFn f = with_f ? r.holo("f") : h;
  const HyperCRTodaFamily fam = hypercr_toda_family(h, a, F);
  WeylStructure3 st = toda_lw(fam.u);
  st.admissible = fam.structure.admissible;
  const HoloFn dF = F.derivative();
  const JetField<3> u_z = [h](const Point<3>& p) { return theorem1_u_z<3>(h, p); };
  const JetField<3> w_eval = [h, f](const Point<3>& p) { return strachan_monopole<3>(h, f, p).w; };
  const auto pts = draw3(
      r, [&r](Rng& g) { return draw_chart_point<3>(g, r.spec().domain); },
      [&](const Point<3>& p) {
        return st.is_admissible(p) && hypercr_sample_admissible(h, p) &&
               std::norm(dF(Complex{p[0], p[1]})) > kPositivityMargin;
      });
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const WeylPointData d = weyl_connection(st, p);
    const HyperCRResidual hc = hypercr_residual(st, fam.kappa, p);
    const CongruenceData cg = congruence_invariants(st, unit_coordinate_field(2), p);
    res["toda"] = toda_residual(fam.u, p);
    res["liouville"] = liouville_residual(F, a, p);
    res["einstein_weyl"] = ricci_weyl(d).tracefree_norm;
    res["torsion"] = torsion_residual(d);
    res["metricity"] = metricity_residual(st, p);
    res["r1"] = hc.r1;
    res["r2"] = hc.r2;
    res["flat_connection"] = flat_connection_residual(st, fam.kappa, kHyperCRFlatSign, p);
    res["twist"] = cg.kappa_twist;
    res["shear"] = cg.shear_norm;
    res["geodesic"] = cg.geodesic_residual;
    res["monopole_u_z"] = monopole_residual(fam.u, u_z, p);
    if (with_f) {
      res["monopole"] = monopole_residual(fam.u, w_eval, p);
      if (fam.normalized && std::hypot(p[0], p[1]) > kChartEpsilon) {
        res["theta"] = theta_residual(h, f, p);
        if (sfk_metric(h, f).is_admissible({p[0], p[1], p[2], 0.0}))
          res["kahler"] = kahler_form_closedness(h, f, {p[0], p[1], p[2], 0.0});
      }
    }
    report.add_point(std::move(rec));
  }
}

inline void run_geodesic_symmetry(Resolver& r, Report& report, int member) {
  const HoloFn H = r.has("H") ? r.holo("H") : r.holo("f").reciprocal();
  const GeodesicSymmetryFamily fam = geodesic_symmetry_family(H);
  const WeylStructure3& st = fam.structure;
  const auto pts = draw3(
      r, [&r](Rng& g) { return draw_xyt(g, r.spec().domain); }, [&](const Point<3>& p) { return st.is_admissible(p); });
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const WeylPointData d = weyl_connection(st, p);
    const CongruenceData cg = congruence_invariants(st, fam.symmetry, p);
    const HyperCRResidual hc = hypercr_residual(st, fam.kappa, p);
    res["einstein_weyl"] = ricci_weyl(d).tracefree_norm;
    res["torsion"] = torsion_residual(d);
    res["metricity"] = metricity_residual(st, p);
    res["tau"] = cg.tau - fam.tau(p).value;
    res["kappa"] = cg.kappa_twist - fam.kappa(p).value;
    res["shear"] = cg.shear_norm;
    res["geodesic"] = cg.geodesic_residual;
    res["flat_connection"] = flat_connection_residual(st, fam.kappa, kHyperCRFlatSign, p);
    res["r1"] = hc.r1;
    res["r2"] = hc.r2;
    report.add_point(std::move(rec));
  }
}

inline void run_berger(Resolver& r, Report& report, int member) {
  const double a = r.real("a");
  const WeylStructure3 st = berger_sphere(a);
  const auto pts = draw3(r, draw_euler, [&](const Point<3>& p) { return st.is_admissible(p); });
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    const WeylPointData d = weyl_connection(st, p);
    rec.residuals["einstein_weyl"] = ricci_weyl(d).tracefree_norm;
    rec.residuals["torsion"] = torsion_residual(d);
    rec.residuals["metricity"] = metricity_residual(st, p);
    report.add_point(std::move(rec));
  }
}

inline void run_sfk(Resolver& r, Report& report, int member) {
  const HoloFn h = r.holo("h");
  const HoloFn f = r.holo("f");
  const Metric4 m = sfk_metric(h, f);
  const JetField<3> u = [h](const Point<3>& p) { return log(shifted_norm<3>(h, p) * sphere_factor<3>(p)); };
  const JetField<3> w = [h, f](const Point<3>& p) { return strachan_monopole<3>(h, f, p).w; };
  const bool hyperkahler = is_constant_one(f);
  const auto pts = draw4(
      r, [&r](Rng& g) { return draw_chart_point<4>(g, r.spec().domain); },
      [&](const Point<4>& p) { return m.is_admissible(p); });
  double surviving = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const Curvature4 c = curvature(m, p);
    const Point<3> p3{p[0], p[1], p[2]};
    res["scal"] = c.scal;
    curvature_residuals(c, res);
    res["killing"] = killing_residual(m, p);
    res["kahler"] = kahler_form_closedness(h, f, p);
    res["monopole"] = monopole_residual(u, w, p3);
    res["theta"] = theta_residual(h, f, p3);
    if (hyperkahler) res["ricci"] = c.ricci_norm;
    surviving = std::min(surviving, surviving_half_norm(c));
    report.add_point(std::move(rec));
  }
  report.recorded["surviving_half_min"].push_back(surviving);
}

inline void run_einstein(Resolver& r, Report& report, int member) {
  const HoloFn h = r.holo("h");
  const double a = r.real_or("a", 1.0);
  const double b = r.real_or("b", 0.0);
  const Metric4 m = a == 1.0 && b == 0.0 ? einstein_metric(h) : einstein_rescaled(h, a, b);
  const Metric4 reference = einstein_rescaled(h, a, b);
  const bool hyperbolic = is_real_constant(h);
  const auto pts = draw4(
      r, [&r](Rng& g) { return draw_chart_point<4>(g, r.spec().domain); },
      [&](const Point<4>& p) { return m.is_admissible(p) && reference.is_admissible(p); });
  std::vector<double> scal;
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const Curvature4 c = curvature(m, p);
    res["tracefree_ricci"] = c.tracefree_ricci_norm;
    curvature_residuals(c, res);
    res["killing"] = killing_residual(m, p);
    res["conformal_match"] = metric_difference(m.at(p), reference.at(p));
    res["scal_per_a"] = c.scal / a - kEinsteinScalPerA;
    if (hyperbolic) res["constant_curvature"] = constant_curvature_residual(c);
    scal.push_back(c.scal);
    report.add_point(std::move(rec));
  }
  scal_summary(scal, report, a);
}

inline void run_pedersen(Resolver& r, Report& report, int member) {
  const double mp = r.real("m");
  const Metric4 m = pedersen_metric(mp);
  const auto pts = draw4(r, draw_ball, [&](const Point<4>& p) { return m.is_admissible(p); });
  std::vector<double> scal;
  for (const auto& p : pts) {
    PointRecord rec{coords_of(p), {}, member};
    auto& res = rec.residuals;
    const Curvature4 c = curvature(m, p);
    res["tracefree_ricci"] = c.tracefree_ricci_norm;
    curvature_residuals(c, res);
    res["killing"] = killing_residual(m, p);
    if (mp == 0.0) {
      res["weyl_norm2"] = c.weyl_norm2;
      res["constant_curvature"] = constant_curvature_residual(c);
    }
    scal.push_back(c.scal);
    report.add_point(std::move(rec));
  }
  scal_summary(scal, report, 0.0);
}

// ---- checks ----

inline void run_quotient(Resolver& r, Report& report, int member) {
  const HoloFn h = r.holo("h");
  const HoloFn f = r.holo("f");
  const std::vector<double> zs = r.reals_or("zs", {0.5, 1.0, 2.0});
  const Metric4 m = sfk_metric(h, f);
  const GeodesicSymmetryFamily target = geodesic_symmetry_family(f.reciprocal());
  const auto pts = draw3(
      r, [&r](Rng& g) { return draw_chart_point<3>(g, r.spec().domain); },
      [&](const Point<3>& p) {
        if (!target.structure.is_admissible({p[0], p[1], 0.0})) return false;
        return std::all_of(zs.begin(), zs.end(),
                           [&](double z) { return detail::theorem1_admissible(h, {p[0], p[1], z, 0.0}); });
      });
  for (const auto& p : pts) {
    PointRecord rec{{p[0], p[1]}, {}, member};
    const QuotientCheck q = quotient_check(h, f, Point<2>{p[0], p[1]}, zs);
    rec.residuals["z_variation"] = q.max_z_variation;
    rec.residuals["match"] = q.match_residual;
    rec.residuals["target_einstein_weyl"] = ricci_weyl(target.structure, {p[0], p[1], p[2]}).tracefree_norm;
    report.add_point(std::move(rec));
  }
}

inline void run_correspondence(Resolver& r, Report& report, int member) {
  const double mp = r.real("m");
  const double fit_z = r.real_or("fit_z", 1.0);
  const std::vector<double> zs = r.reals_or("zs", {0.25, 4.0, 100.0});
  const PedersenCorrespondence fit = pedersen_correspondence(mp, fit_z);
  // |W|^2 scales by lambda^-2 under g -> lambda g
  const double scale = fit.w2_ours == 0.0 ? 1.0 : fit.w2_pedersen / fit.w2_ours;
  report.recorded["w2_homothety"].push_back(scale);
  report.recorded["scal_ratio"].push_back(fit.scal_ours / fit.scal_pedersen);
  report.recorded["homothety_from_scal"].push_back(std::pow(fit.scal_pedersen / fit.scal_ours, 2));
  for (const double z : zs) {
    const PedersenCorrespondence c = pedersen_correspondence(mp, z);
    PointRecord rec{{z}, {}, member};
    rec.residuals["w2_mismatch"] = scale * c.w2_ours - c.w2_pedersen;
    rec.residuals["scal_mismatch"] = c.scal_ours / fit.scal_ours - c.scal_pedersen / fit.scal_pedersen;
    report.add_point(std::move(rec));
  }
}

inline void run_substrate(Resolver& r, Report& report, int member) {
  const double step = r.real_or("step", 1e-5);
  Rng& rng = r.rng();
  const SampleDomain& dom = r.spec().domain;
  const std::size_t n = r.spec().samples;

  auto fd3 = [&](const std::string& name, const WeylStructure3& st, std::function<Point<3>(Rng&)> draw) {
    const auto pts = draw_admissible<3>(rng, n, draw, guarded([&](const Point<3>& p) { return st.is_admissible(p); }));
    for (const auto& p : pts) {
      double worst = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j)
          worst = std::max(worst, fd_crosscheck<3>([&](const Point<3>& q) { return st.eval(q).g[i][j]; }, p, step));
      report.add_point({coords_of(p), {{"fd_" + name, worst}}, member});
    }
  };
  auto fd4 = [&](const std::string& name, const Metric4& m, std::function<Point<4>(Rng&)> draw) {
    const auto pts = draw_admissible<4>(rng, n, draw, guarded4([&](const Point<4>& p) { return m.is_admissible(p); }));
    for (const auto& p : pts) {
      double worst = 0.0;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
          worst = std::max(worst, fd_crosscheck<4>([&](const Point<4>& q) { return m.eval(q)[i][j]; }, p, step));
      report.add_point({coords_of(p), {{"fd_" + name, worst}}, member});
    }
  };
  const HoloFn h = r.holo_or("h", HoloFn::parse("poly:1+0.3i,0.4-0.2i,0.1+0.2i"));
  const HoloFn f = r.holo_or("f", HoloFn::parse("poly:2+0.1i,0.3+0.2i"));
  auto chart3 = [&dom](Rng& g) { return draw_chart_point<3>(g, dom); };
  auto chart4 = [&dom](Rng& g) { return draw_chart_point<4>(g, dom); };

  const HyperCRTodaFamily toda = hypercr_toda_family(h);
  fd3("hypercr-toda", toda.structure, chart3);
  WeylStructure3 custom = toda_lw(hypercr_toda_family(h, 0.5, HoloFn::parse("poly:0,0,1")).u);
  custom.admissible = [](const Point<3>& p) { return std::hypot(p[0], p[1]) > 0.05; };
  fd3("lebrun-ward-custom", custom, chart3);
  fd3("geodesic-symmetry", geodesic_symmetry_family(f.reciprocal()).structure,
      [&dom](Rng& g) { return draw_xyt(g, dom); });
  fd3("berger", berger_sphere(0.6), draw_euler);
  fd4("sfk", sfk_metric(h, f), chart4);
  fd4("einstein", einstein_metric(h), chart4);
  fd4("pedersen", pedersen_metric(1.0), draw_ball);

  // sign-convention oracles
  for (std::size_t i = 0; i < n; ++i) {
    const Point<3> p3 = draw_euler(rng);
    const WeylPointData d = weyl_connection(round_s3_structure(), p3);
    report.add_point({coords_of(p3), {{"s3_ricci", einstein_oracle_residual<3>(ricci_weyl(d).ricci, d.g, 2.0)}}, member});
    const Point<4> p4{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const Curvature4 c = curvature(round_s4_metric(), p4);
    report.add_point({coords_of(p4), {{"s4_ricci", einstein_oracle_residual<4>(c.ricci, c.g, 3.0)}}, member});
  }

  // identical seeds give identical reports
  SuiteSpec probe;
  probe.name = "determinism-probe";
  probe.family = "hypercr-toda";
  probe.params["h"] = "random";
  probe.samples = 3;
  probe.seed = r.spec().seed;
  const std::string first = run_suite(probe).to_json().dump();
  const std::string second = run_suite(probe).to_json().dump();
  report.add_scalar("determinism", first == second ? 0.0 : 1.0);
}

}  // namespace detail

inline Report run_suite(const SuiteSpec& spec) {
  using Runner = void (*)(detail::Resolver&, Report&, int);
  static const std::map<std::string, Runner> runners{
      {"hypercr-toda", detail::run_hypercr_toda},
      {"geodesic-symmetry", detail::run_geodesic_symmetry},
      {"berger", detail::run_berger},
      {"lebrun-ward-custom", detail::run_lebrun_ward},
      {"sfk", detail::run_sfk},
      {"einstein", detail::run_einstein},
      {"pedersen", detail::run_pedersen},
      {"quotient", detail::run_quotient},
      {"pedersen-correspondence", detail::run_correspondence},
      {"substrate", detail::run_substrate},
  };
  const auto it = runners.find(spec.family);
  if (it == runners.end()) throw ConfigError("unknown family '" + spec.family + "'");
  if (spec.samples == 0) throw ConfigError("samples must be positive");
  if (spec.ensemble == 0) throw ConfigError("ensemble must be positive");
  if (!(spec.tol > 0.0)) throw ConfigError("tol must be positive");
  const SampleDomain& d = spec.domain;
  if (!(d.r_min >= 0.0 && d.r_min < d.r_max && d.z_min < d.z_max && d.t_min <= d.t_max))
    throw ConfigError("empty sampling domain");

  Report report;
  report.name = spec.name.empty() ? spec.family : spec.name;
  report.family = spec.family;
  report.tol = spec.tol;
  report.tolerances = spec.tolerances;
  Json& params = report.params;
  params["samples"] = spec.samples;
  params["seed"] = spec.seed;
  params["ensemble"] = spec.ensemble;
  params["domain"] = {{"r_min", d.r_min}, {"r_max", d.r_max}, {"z_min", d.z_min},
                      {"z_max", d.z_max}, {"t_min", d.t_min}, {"t_max", d.t_max}};
  params["given"] = spec.params;
  params["members"] = Json::array();

  Rng rng(spec.seed);
  for (std::size_t k = 0; k < spec.ensemble; ++k) {
    detail::Resolver resolver(spec, rng);
    const int member = spec.ensemble > 1 ? static_cast<int>(k) : -1;
    try {
      it->second(resolver, report, member);
    } catch (const CoverageError& e) {
      report.error = std::string("domain coverage: ") + e.what();
    } catch (const DomainError& e) {
      report.error = std::string("domain error: ") + e.what();
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    params["members"].push_back(resolver.echo);
    if (!report.error.empty()) break;
  }
  return report;
}

}  // namespace ewtoda
