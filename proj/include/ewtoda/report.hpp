#pragma once

// Residual reports: per-point records, per-residual maxima, the convention
// ledger, and JSON / CSV serialization.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ewtoda/curvature4.hpp"
#include "ewtoda/families3.hpp"
#include "ewtoda/metrics4.hpp"
#include "ewtoda/monopole.hpp"
#include "ewtoda/sampling.hpp"
#include "ewtoda/sphere.hpp"
#include "ewtoda/weyl3.hpp"

namespace ewtoda {

using Json = nlohmann::json;

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr std::size_t kDefaultSamples = 20;

/// Every frozen sign and proportionality constant, embedded in each report.
inline Json convention_ledger() {
  Json j;
  j["riemann"] = "R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z";
  j["ricci"] = "Ric(Y,Z) = tr(X -> R(X,Y)Z)";
  j["weyl_gauge"] = "Dg = -2 omega (x) g; g -> e^{2 phi} g, omega -> omega - d phi";
  j["orientation_3d"] = "dx^dy^dz, dtheta^dphi^dpsi";
  j["orientation_4d"] = "dx^dy^dz^dt, drho^dtheta^dphi^dpsi";
  j["toda_kappa_sign"] = kTodaKappaSign;
  j["hypercr_flat_sign"] = kHyperCRFlatSign;
  j["scal_kappa_constant"] = kScalKappaConstant;
  j["monopole_v_sign"] = kMonopoleVSign;
  j["vanishing_weyl_half"] = kVanishingWeylHalf == WeylHalf::self_dual ? "self-dual" : "anti-self-dual";
  j["einstein_scal_per_a"] = kEinsteinScalPerA;
  j["berger_b"] = "+a sqrt(1 - a^2)";
  j["chart_epsilon"] = kChartEpsilon;
  j["positivity_margin"] = kPositivityMargin;
  return j;
}

struct PointRecord {
  std::vector<double> coords;
  std::map<std::string, double> residuals;
  int member = -1;  ///< ensemble member, -1 for a single parameter set
};

struct Report {
  std::string name;
  std::string family;
  Json params = Json::object();
  Json ledger = convention_ledger();
  std::vector<PointRecord> points;
  /// Largest |value| of every residual, plus suite-level scalars.
  std::map<std::string, double> maxima;
  double tol = kDefaultTolerance;
  std::map<std::string, double> tolerances;  ///< per-residual overrides
  std::string error;                          ///< domain / coverage error, fails the report
  /// Measured constants that are reported but not compared to a tolerance.
  Json recorded = Json::object();

  double tolerance_for(const std::string& residual) const {
    const auto it = tolerances.find(residual);
    return it == tolerances.end() ? tol : it->second;
  }

  void add_point(PointRecord rec) {
    for (const auto& [k, v] : rec.residuals) fold(k, v);
    points.push_back(std::move(rec));
  }

  void add_scalar(const std::string& residual, double value) { fold(residual, value); }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : maxima)
      if (!(v <= tolerance_for(k))) out.push_back(k);
    return out;
  }

  bool pass() const { return error.empty() && failures().empty(); }

  double max_of(const std::string& residual) const {
    const auto it = maxima.find(residual);
    return it == maxima.end() ? std::nan("") : it->second;
  }

  Json to_json() const {
    Json j;
    if (!name.empty()) j["name"] = name;
    j["family"] = family;
    j["params"] = params;
    j["params"]["tol"] = tol;
    if (!tolerances.empty()) j["params"]["tolerances"] = tolerances;
    j["ledger"] = ledger;
    Json pts = Json::array();
    for (const auto& rec : points) {
      Json p;
      p["coords"] = rec.coords;
      p["residuals"] = rec.residuals;
      if (rec.member >= 0) p["member"] = rec.member;
      pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    j["maxima"] = maxima;
    j["pass"] = pass();
    if (!recorded.empty()) j["recorded"] = recorded;
    if (!error.empty()) j["error"] = error;
    const auto failed = failures();
    if (!failed.empty()) j["failures"] = failed;
    return j;
  }

 private:
  void fold(const std::string& k, double v) {
    const double a = std::isnan(v) ? v : std::abs(v);
    auto [it, inserted] = maxima.emplace(k, a);
    if (!inserted && (std::isnan(a) || a > it->second)) it->second = a;
  }
};

/// Suites merged into one report; maxima are keyed "suite.residual".
inline Json aggregate_json(const std::vector<Report>& suites, const Json& params) {
  Json j;
  j["family"] = "report-all";
  j["params"] = params;
  j["ledger"] = convention_ledger();
  j["points"] = Json::array();
  Json maxima = Json::object();
  Json sections = Json::array();
  bool pass = true;
  for (const auto& r : suites) {
    for (const auto& [k, v] : r.maxima) maxima[r.name + "." + k] = v;
    pass = pass && r.pass();
    sections.push_back(r.to_json());
  }
  j["maxima"] = std::move(maxima);
  j["suites"] = std::move(sections);
  j["pass"] = pass;
  return j;
}

inline std::string format_csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Comma-separated table with a mandatory header row and 17 significant digits.
inline void write_csv(std::ostream& os, const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_csv_number(row[i]);
    os << '\n';
  }
}

}  // namespace ewtoda
