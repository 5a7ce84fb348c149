#pragma once

// Plain-text suite configuration:
//
//   # comment
//   [suite-name]
//   family = berger
//   a = 0.6
//   tol = 1e-10
//   tol.einstein_weyl = 1e-12
//
// One suite per section. Errors carry the 1-based line number.

#include <charconv>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ewtoda/suites.hpp"

namespace ewtoda {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::string body = text;
  int base = 10;
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    body = body.substr(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v, base);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size())
    throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

inline const std::set<std::string>& parameter_keys() {
  static const std::set<std::string> keys{"h", "f", "F", "H", "a", "b", "m", "zs", "fit_z", "step"};
  return keys;
}

inline void apply_key(SuiteSpec& spec, const std::string& key, const std::string& value) {
  if (key == "family") {
    spec.family = value;
  } else if (key == "samples") {
    spec.samples = parse_u64(key, value);
  } else if (key == "ensemble") {
    spec.ensemble = parse_u64(key, value);
  } else if (key == "seed") {
    spec.seed = parse_u64(key, value);
  } else if (key == "tol") {
    spec.tol = parse_real(key, value);
  } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
    spec.tolerances[key.substr(4)] = parse_real(key, value);
  } else if (key == "r_min") {
    spec.domain.r_min = parse_real(key, value);
  } else if (key == "r_max") {
    spec.domain.r_max = parse_real(key, value);
  } else if (key == "z_min") {
    spec.domain.z_min = parse_real(key, value);
  } else if (key == "z_max") {
    spec.domain.z_max = parse_real(key, value);
  } else if (key == "t_min") {
    spec.domain.t_min = parse_real(key, value);
  } else if (key == "t_max") {
    spec.domain.t_max = parse_real(key, value);
  } else if (parameter_keys().count(key)) {
    spec.params[key] = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

}  // namespace detail

inline std::vector<SuiteSpec> parse_config(std::istream& in) {
  std::vector<SuiteSpec> suites;
  std::set<std::string> names;
  std::string raw;
  int line_no = 0;
  auto fail = [&line_no](const std::string& msg) -> ConfigError {
    return ConfigError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      const std::string name = detail::trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw fail("empty section name");
      if (!names.insert(name).second) throw fail("duplicate section '" + name + "'");
      suites.emplace_back();
      suites.back().name = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value'");
    if (suites.empty()) throw fail("key outside of a section");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw fail("expected 'key = value'");
    try {
      detail::apply_key(suites.back(), key, value);
    } catch (const ConfigError& e) {
      throw fail(e.what());
    }
  }
  for (const auto& s : suites)
    if (s.family.empty()) throw ConfigError("section '" + s.name + "' has no family");
  if (suites.empty()) throw ConfigError("configuration lists no suites");
  return suites;
}

inline std::vector<SuiteSpec> parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace ewtoda
