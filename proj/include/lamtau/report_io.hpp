#pragma once

// Output artifacts: the run manifest embedded at the top of every file, the
// Table-style report (crisp column plus one defuzzified column per spread),
// per-spread membership curves, and reference-value comparison.

#include "lamtau/measures.hpp"
#include "lamtau/version.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lamtau {

/// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// Spread fraction as a percentage label: 0.15 -> "15", 0.125 -> "12.5".
inline std::string spread_label(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", fraction * 100.0);
  return buf;
}

/// Everything needed to reproduce a run; embedded verbatim in every output
/// artifact. No timestamps, so identical inputs give identical artifacts.
struct RunManifest {
  std::string command;
  std::string model_path;
  std::optional<double> time_hours;
  std::vector<double> spreads;
  std::optional<int> alpha_levels;
  std::optional<std::string> mode;
  std::optional<int> grid_points;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;

  std::string header_lines() const {
    std::ostringstream out;
    out << "# " << kToolName << " " << version << "\n# command=" << command
        << " model=" << model_path;
    if (time_hours) out << " time=" << format_double(*time_hours);
    if (!spreads.empty()) {
      out << " spreads=";
      for (std::size_t i = 0; i < spreads.size(); ++i)
        out << (i ? "," : "") << format_double(spreads[i]);
    }
    if (alpha_levels) out << " alpha_levels=" << *alpha_levels;
    if (mode) out << " mode=" << *mode;
    if (grid_points) out << " grid_points=" << *grid_points;
    if (trials) out << " trials=" << *trials;
    if (seed) out << " seed=" << *seed;
    out << "\n";
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = version;
    j["command"] = command;
    j["model"] = model_path;
    if (time_hours) j["time"] = *time_hours;
    if (!spreads.empty()) j["spreads"] = spreads;
    if (alpha_levels) j["alpha_levels"] = *alpha_levels;
    if (mode) j["mode"] = *mode;
    if (grid_points) j["grid_points"] = *grid_points;
    if (trials) j["trials"] = *trials;
    if (seed) j["seed"] = *seed;
    return j;
  }
};

namespace detail {

inline std::vector<std::pair<std::string, double>> crisp_rows(const CrispMeasures& c) {
  return {{"failure_rate", c.failure_rate},
          {"repair_time", c.repair_time},
          {"enof", c.enof},
          {"mtbf", c.mtbf},
          {"reliability", c.reliability},
          {"availability", c.availability}};
}

}  // namespace detail

/// Report CSV, Table layout: parameter,crisp,defuzz_<p> per spread. MTTF and
/// MTTR are crisp-only rows at the end. `reports` is aligned with `spreads`
/// in the manifest and may be empty for a crisp-only report.
inline std::string report_csv(const RunManifest& man, const CrispMeasures& crisp,
                              const std::vector<ReliabilityReport>& reports) {
  std::ostringstream out;
  out << man.header_lines();
  out << "parameter,crisp";
  for (const ReliabilityReport& r : reports) out << ",defuzz_" << spread_label(r.spread.fraction);
  out << "\n";
  const auto rows = detail::crisp_rows(crisp);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i].first << "," << format_double(rows[i].second);
    for (const ReliabilityReport& r : reports)
      out << "," << format_double(r.parameters()[i].second->defuzzified);
    out << "\n";
  }
  for (const auto& [name, value] :
       std::vector<std::pair<std::string, double>>{{"mttf", crisp.mttf}, {"mttr", crisp.mttr}}) {
    out << name << "," << format_double(value);
    for (std::size_t i = 0; i < reports.size(); ++i) out << ",";
    out << "\n";
  }
  return out.str();
}

/// Membership-curve data for one spread: parameter,alpha,left,right.
inline std::string membership_csv(const RunManifest& man, const ReliabilityReport& report) {
  std::ostringstream out;
  out << man.header_lines();
  out << "parameter,alpha,left,right\n";
  for (const auto& [name, param] : report.parameters())
    for (const AlphaCut& level : param->fuzzy.levels())
      out << name << "," << format_double(level.alpha) << "," << format_double(level.cut.lo)
          << "," << format_double(level.cut.hi) << "\n";
  return out.str();
}

/// JSON report carrying the manifest, crisp values, and per-spread
/// defuzzified values plus membership curves.
inline std::string report_json(const RunManifest& man, const CrispMeasures& crisp,
                               const std::vector<ReliabilityReport>& reports) {
  nlohmann::json j;
  j["manifest"] = man.to_json();
  for (const auto& [name, value] : detail::crisp_rows(crisp)) j["crisp"][name] = value;
  j["crisp"]["mttf"] = crisp.mttf;
  j["crisp"]["mttr"] = crisp.mttr;
  auto& spreads = j["spreads"] = nlohmann::json::array();
  for (const ReliabilityReport& r : reports) {
    nlohmann::json s;
    s["spread"] = r.spread.fraction;
    s["label"] = spread_label(r.spread.fraction);
    s["mode"] = to_string(r.mode);
    for (const auto& [name, param] : r.parameters()) {
      s["defuzzified"][name] = param->defuzzified;
      auto& curve = s["membership"][name] = nlohmann::json::array();
      for (const AlphaCut& level : param->fuzzy.levels())
        curve.push_back({{"alpha", level.alpha}, {"left", level.cut.lo}, {"right", level.cut.hi}});
    }
    spreads.push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

/// Parses a parameter,value CSV (lines starting with '#' are comments).
inline std::vector<std::pair<std::string, double>> parse_reference_csv(const std::string& text) {
  std::vector<std::pair<std::string, double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) continue;
    const std::string name = line.substr(0, comma);
    if (name == "parameter") continue;  // header
    try {
      rows.emplace_back(name, std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("reference file: bad value on line '" + line + "'");
    }
  }
  return rows;
}

/// Comparison of computed crisp values against bundled reference values:
/// parameter,computed,reference,delta,rel_delta.
inline std::string reference_delta_csv(const RunManifest& man, const CrispMeasures& crisp,
                                       const std::vector<std::pair<std::string, double>>& ref) {
  std::ostringstream out;
  out << man.header_lines();
  out << "parameter,computed,reference,delta,rel_delta\n";
  const auto rows = detail::crisp_rows(crisp);
  for (const auto& [name, ref_value] : ref) {
    for (const auto& [param, computed] : rows) {
      if (param != name) continue;
      const double delta = computed - ref_value;
      out << name << "," << format_double(computed) << "," << format_double(ref_value) << ","
          << format_double(delta) << "," << format_double(delta / ref_value) << "\n";
    }
  }
  return out.str();
}

}  // namespace lamtau
