// ewtoda: verify the Einstein-Weyl, monopole and 4-metric families at seeded
// random points, sample them on grids, and run whole configuration files.
//
// Exit status: 0 pass, 1 residual above tolerance, 2 configuration or domain error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ewtoda/ewtoda.hpp"

namespace {

using namespace ewtoda;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Options {
  std::string family;
  std::string h, f, F, H, a, b, m;
  std::size_t samples = kDefaultSamples;
  std::size_t ensemble = 1;
  std::string seed = "0xE3";
  double tol = kDefaultTolerance;
  SampleDomain domain;
  std::string output;
  std::string grid = "10,10,10";
  std::string config;
};

void add_run_options(CLI::App* cmd, Options& o) {
  // --h is the parameter h, so help is --help only
  cmd->set_help_flag("--help", "print this help and exit");
  cmd->add_option("--family", o.family, "family name")->required();
  cmd->add_option("--h", o.h, "h, e.g. poly:1,0+1i or random");
  cmd->add_option("--f", o.f, "monopole f");
  cmd->add_option("--F", o.F, "Liouville generator F");
  cmd->add_option("--H", o.H, "geodesic-symmetry H");
  cmd->add_option("--a", o.a, "real parameter a");
  cmd->add_option("--b", o.b, "real parameter b");
  cmd->add_option("--m", o.m, "Pedersen parameter m");
  cmd->add_option("--samples", o.samples, "points per parameter set")->capture_default_str();
  cmd->add_option("--ensemble", o.ensemble, "parameter draws when a parameter is random")->capture_default_str();
  cmd->add_option("--seed", o.seed, "64-bit seed, decimal or 0x hex")->capture_default_str();
  cmd->add_option("--tol", o.tol, "residual tolerance")->capture_default_str();
  cmd->add_option("--z-min", o.domain.z_min, "lower end of the z range")->capture_default_str();
  cmd->add_option("--z-max", o.domain.z_max, "upper end of the z range")->capture_default_str();
  cmd->add_option("--r-min", o.domain.r_min, "inner radius of the zeta annulus")->capture_default_str();
  cmd->add_option("--r-max", o.domain.r_max, "outer radius of the zeta annulus")->capture_default_str();
  cmd->add_option("-o,--output", o.output, "output path");
}

SuiteSpec spec_from(const Options& o) {
  SuiteSpec s;
  s.family = o.family;
  const std::pair<const char*, const std::string*> entries[] = {{"h", &o.h}, {"f", &o.f}, {"F", &o.F}, {"H", &o.H},
                                                                {"a", &o.a}, {"b", &o.b}, {"m", &o.m}};
  for (const auto& [key, value] : entries)
    if (!value->empty()) s.params[key] = *value;
  s.samples = o.samples;
  s.ensemble = o.ensemble;
  s.seed = detail::parse_u64("seed", o.seed);
  s.tol = o.tol;
  s.domain = o.domain;
  return s;
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ConfigError("cannot write " + path);
}

void summarize(const Report& r) {
  std::fprintf(stderr, "%-28s %s", r.name.c_str(), !r.error.empty() ? "ERROR" : r.pass() ? "pass" : "FAIL");
  if (!r.error.empty()) std::fprintf(stderr, "  %s", r.error.c_str());
  for (const auto& name : r.failures())
    std::fprintf(stderr, "  %s=%.3g>%.3g", name.c_str(), r.max_of(name), r.tolerance_for(name));
  std::fputc('\n', stderr);
}

int status_of(const std::vector<Report>& reports) {
  int status = kExitPass;
  for (const auto& r : reports) {
    if (!r.error.empty()) return kExitError;
    if (!r.pass()) status = kExitFail;
  }
  return status;
}

int cmd_verify(const Options& o) {
  const Report r = run_suite(spec_from(o));
  write_json(r.to_json(), o.output);
  summarize(r);
  return status_of({r});
}

std::string extension_of(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot == std::string::npos ? std::string() : path.substr(dot + 1);
}

int cmd_sample(const Options& o) {
  if (o.family != "hypercr-toda" && o.family != "lebrun-ward-custom")
    throw ConfigError("sample supports the hypercr-toda and lebrun-ward-custom families");
  const std::string ext = extension_of(o.output);
  if (ext != "csv" && ext != "json") throw ConfigError("output must end in .csv or .json");
  std::vector<std::size_t> counts;
  for (const double v : parse_real_list("grid", o.grid)) {
    if (!(v >= 1.0) || v != std::floor(v)) throw ConfigError("grid: expected positive integers");
    counts.push_back(static_cast<std::size_t>(v));
  }
  if (counts.size() != 3) throw ConfigError("grid: expected NX,NY,NZ");

  SuiteSpec spec = spec_from(o);
  if (!spec.params.count("h")) throw ConfigError("missing parameter h");
  Rng rng(spec.seed);
  detail::Resolver res(spec, rng);
  const HoloFn h = res.holo("h");
  const double a = res.real_or("a", 1.0);
  const HoloFn F = res.holo_or("F", HoloFn::identity());
  const HoloFn f = res.holo_or("f", h);
  HyperCRTodaFamily fam;
  try {
    fam = hypercr_toda_family(h, a, F);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  WeylStructure3 st = fam.structure;
  if (o.family == "lebrun-ward-custom") {
    st = toda_lw(fam.u);
    st.admissible = fam.structure.admissible;
  }
  const JetField<3> w_eval = [h, f](const Point<3>& p) { return strachan_monopole<3>(h, f, p).w; };

  const std::vector<std::string> columns{"x",       "y",       "z",    "g_xx",  "g_xy",          "g_xz", "g_yy",
                                         "g_yz",    "g_zz",    "omega_x", "omega_y", "omega_z",  "u",    "kappa",
                                         "w",       "toda",    "einstein_weyl", "r1",   "r2",     "monopole"};
  std::vector<std::vector<double>> rows;
  std::size_t skipped = 0;
  const SampleDomain& d = spec.domain;
  auto axis = [](double lo, double hi, std::size_t n, std::size_t i) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  for (std::size_t i = 0; i < counts[0]; ++i)
    for (std::size_t j = 0; j < counts[1]; ++j)
      for (std::size_t k = 0; k < counts[2]; ++k) {
        const Point<3> p{axis(-d.r_max, d.r_max, counts[0], i), axis(-d.r_max, d.r_max, counts[1], j),
                         axis(d.z_min, d.z_max, counts[2], k)};
        try {
          if (!st.is_admissible(p) || !detail::hypercr_sample_admissible(h, p) ||
              std::hypot(p[0], p[1]) < std::max(d.r_min, kChartEpsilon)) {
            ++skipped;
            continue;
          }
          const WeylGauge gauge = st.eval(p);
          const WeylPointData wd = weyl_connection(st, p);
          const HyperCRResidual hc = hypercr_residual(st, fam.kappa, p);
          std::vector<double> row{p[0], p[1], p[2]};
          for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = r; c < 3; ++c) row.push_back(gauge.g[r][c].value);
          for (std::size_t r = 0; r < 3; ++r) row.push_back(gauge.omega[r].value);
          row.push_back(fam.u(p).value);
          row.push_back(hc.kappa);
          row.push_back(w_eval(p).value);
          row.push_back(toda_residual(fam.u, p));
          row.push_back(ricci_weyl(wd).tracefree_norm);
          row.push_back(hc.r1);
          row.push_back(hc.r2);
          row.push_back(monopole_residual(fam.u, w_eval, p));
          rows.push_back(std::move(row));
        } catch (const DomainError&) {
          ++skipped;
        }
      }
  if (rows.empty()) throw DomainError("no admissible grid node", 0.0);

  std::ofstream out(o.output);
  if (!out) throw ConfigError("cannot write " + o.output);
  if (ext == "csv") {
    write_csv(out, columns, rows);
  } else {
    Json j;
    j["family"] = o.family;
    j["params"] = res.echo;
    j["columns"] = columns;
    j["rows"] = rows;
    j["skipped"] = skipped;
    out << j.dump() << '\n';
  }
  if (!out) throw ConfigError("cannot write " + o.output);
  std::fprintf(stderr, "wrote %zu rows to %s (%zu nodes skipped)\n", rows.size(), o.output.c_str(), skipped);
  return kExitPass;
}

int cmd_report_all(const Options& o) {
  std::ifstream in(o.config);
  if (!in) throw ConfigError("cannot read " + o.config);
  const std::vector<SuiteSpec> specs = parse_config(in);
  std::vector<Report> reports;
  for (const auto& s : specs) {
    reports.push_back(run_suite(s));
    summarize(reports.back());
  }
  write_json(aggregate_json(reports, {{"config", o.config}}), o.output);
  return status_of(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein-Weyl / hyperCR Toda verification"};
  app.require_subcommand(1);
  Options verify_opts, sample_opts, all_opts;
  auto* verify = app.add_subcommand("verify", "run the residual suite of one family");
  add_run_options(verify, verify_opts);
  auto* sample = app.add_subcommand("sample", "write fields and residuals on a grid (CSV or JSON by extension)");
  add_run_options(sample, sample_opts);
  sample->add_option("--grid", sample_opts.grid, "NX,NY,NZ")->capture_default_str();
  auto* all = app.add_subcommand("report-all", "run every suite of a configuration file");
  all->add_option("config", all_opts.config, "configuration file")->required();
  all->add_option("-o,--output", all_opts.output, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (sample->parsed()) return cmd_sample(sample_opts);
    return cmd_report_all(all_opts);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  } catch (const DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
  } catch (const CoverageError& e) {
    std::fprintf(stderr, "domain coverage: %s\n", e.what());
  }
  return kExitError;
}
