// Command-line front end: analyze (report + membership curves), cutsets
// (minimal cut/path sets) and simulate (Monte Carlo vs analytic values).
//
// Exit codes: 0 success, 1 bad input, 2 internal invariant violation.

#include "lamtau/lamtau.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
  std::cout << "wrote " << path.string() << "\n";
}

std::string format_set(const std::vector<std::string>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += set[i];
  }
  return out + "}";
}

struct AnalyzeOptions {
  std::string model_path;
  double time = 0.0;
  std::vector<double> spreads;
  int alpha_levels = 101;
  std::string mode = "naive";
  int grid_points = 2001;
  std::string format = "csv";
  std::string out_dir = ".";
  std::string reference_path;
};

/// Direction of the defuzzified value across increasing spreads.
std::string trend_of(const std::vector<double>& values) {
  if (values.size() < 2) return "n/a";
  bool inc = true, dec = true, flat = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    inc = inc && values[i] > values[i - 1];
    dec = dec && values[i] < values[i - 1];
    flat = flat && values[i] == values[i - 1];
  }
  if (flat) return "flat";
  if (inc) return "increasing";
  if (dec) return "decreasing";
  return "mixed";
}

int run_analyze(const AnalyzeOptions& opt) {
  const lamtau::SystemModel model = lamtau::parse_model(read_file(opt.model_path));
  const lamtau::MissionTime t(opt.time);
  const lamtau::FuzzyMode mode =
      opt.mode == "vertex" ? lamtau::FuzzyMode::vertex : lamtau::FuzzyMode::naive;

  const lamtau::SystemRates rates = lamtau::reduce_crisp(model);
  const lamtau::CrispMeasures crisp = lamtau::point_measures(rates, t);
  std::vector<lamtau::ReliabilityReport> reports;
  for (double s : opt.spreads)
    reports.push_back(lamtau::build_report(model, t, lamtau::SpreadSpec(s), opt.alpha_levels,
                                           mode, opt.grid_points));

  lamtau::RunManifest man;
  man.command = "analyze";
  man.model_path = opt.model_path;
  man.time_hours = opt.time;
  man.spreads = opt.spreads;
  man.alpha_levels = opt.alpha_levels;
  man.mode = opt.mode;
  man.grid_points = opt.grid_points;

  fs::create_directories(opt.out_dir);
  const fs::path out_dir(opt.out_dir);
  if (opt.format == "json") {
    write_file(out_dir / "report.json", lamtau::report_json(man, crisp, reports));
  } else {
    write_file(out_dir / "report.csv", lamtau::report_csv(man, crisp, reports));
  }
  for (const lamtau::ReliabilityReport& r : reports) {
    const std::string label = lamtau::spread_label(r.spread.fraction);
    write_file(out_dir / ("membership_" + label + ".csv"), lamtau::membership_csv(man, r));
  }
  if (!opt.reference_path.empty()) {
    const auto ref = lamtau::parse_reference_csv(read_file(opt.reference_path));
    write_file(out_dir / "reference_delta.csv", lamtau::reference_delta_csv(man, crisp, ref));
  }

  std::cout << man.header_lines();
  std::cout << "crisp: lambda_s=" << lamtau::format_double(rates.lambda_s)
            << " tau_s=" << lamtau::format_double(rates.tau_s)
            << " mttf=" << lamtau::format_double(crisp.mttf)
            << " mtbf=" << lamtau::format_double(crisp.mtbf) << "\n";
  if (!reports.empty()) {
    std::cout << "parameter,crisp";
    for (const lamtau::ReliabilityReport& r : reports)
      std::cout << ",defuzz_" << lamtau::spread_label(r.spread.fraction);
    std::cout << ",trend\n";
    const auto rows = reports.front().parameters();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<double> defuzz;
      for (const lamtau::ReliabilityReport& r : reports)
        defuzz.push_back(r.parameters()[i].second->defuzzified);
      std::cout << rows[i].first << "," << lamtau::format_double(rows[i].second->crisp);
      for (double d : defuzz) std::cout << "," << lamtau::format_double(d);
      std::cout << "," << trend_of(defuzz) << "\n";
    }
  }
  if (!opt.reference_path.empty()) {
    const auto ref = lamtau::parse_reference_csv(read_file(opt.reference_path));
    std::cout << lamtau::reference_delta_csv(man, crisp, ref);
  }
  return 0;
}

int run_cutsets(const std::string& model_path) {
  const lamtau::SystemModel model = lamtau::parse_model(read_file(model_path));
  const lamtau::PetriNet net = lamtau::to_petri_net(model);
  const lamtau::CutSetFamily cuts = lamtau::minimal_cut_sets(net);
  const lamtau::CutSetFamily paths = lamtau::minimal_path_sets(net);
  std::cout << "minimal cut sets (" << cuts.sets.size() << "):\n";
  for (const auto& s : cuts.sets) std::cout << format_set(s) << "\n";
  std::cout << "minimal path sets (" << paths.sets.size() << "):\n";
  for (const auto& s : paths.sets) std::cout << format_set(s) << "\n";
  return 0;
}

int run_simulate(const std::string& model_path, double time, std::uint64_t trials,
                 std::uint64_t seed) {
  const lamtau::SystemModel model = lamtau::parse_model(read_file(model_path));
  const lamtau::SimConfig cfg(trials, time, seed);
  const lamtau::SystemRates rates = lamtau::reduce_crisp(model);
  const lamtau::CrispMeasures crisp = lamtau::point_measures(rates, lamtau::MissionTime(time));
  const lamtau::SimEstimate est = lamtau::simulate_system(model, cfg);

  lamtau::RunManifest man;
  man.command = "simulate";
  man.model_path = model_path;
  man.time_hours = time;
  man.trials = trials;
  man.seed = seed;
  std::cout << man.header_lines();
  std::cout << "metric,analytic,estimate,std_error,rel_delta\n";
  const auto row = [](const char* name, double analytic, double estimate, double se) {
    std::cout << name << "," << lamtau::format_double(analytic) << ","
              << lamtau::format_double(estimate) << "," << lamtau::format_double(se) << ","
              << lamtau::format_double((estimate - analytic) / analytic) << "\n";
  };
  row("availability", crisp.availability, est.availability, est.availability_se);
  row("reliability", crisp.reliability, est.reliability, est.reliability_se);
  row("expected_failures", crisp.enof, est.expected_failures, est.expected_failures_se);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy lambda-tau reliability analysis over AND/OR fault trees"};
  app.require_subcommand(1);

  AnalyzeOptions aopt;
  CLI::App* analyze = app.add_subcommand("analyze", "reliability report and membership curves");
  analyze->add_option("--model", aopt.model_path, "model file (JSON)")->required();
  analyze->add_option("--time", aopt.time, "mission time in hours")
      ->required()
      ->check(CLI::PositiveNumber);
  analyze->add_option("--spread", aopt.spreads, "spread fraction in [0,1), repeatable");
  analyze->add_option("--alpha-levels", aopt.alpha_levels, "alpha grid size")
      ->check(CLI::Range(2, 1000000));
  analyze->add_option("--mode", aopt.mode, "interval evaluation mode")
      ->check(CLI::IsMember({"naive", "vertex"}));
  analyze->add_option("--grid-points", aopt.grid_points, "COA integration grid")
      ->check(CLI::Range(2, 100000000));
  analyze->add_option("--format", aopt.format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", aopt.out_dir, "output directory");
  analyze->add_option("--reference", aopt.reference_path,
                      "reference crisp values (parameter,value CSV) to compare against");

  std::string cut_model;
  CLI::App* cutsets = app.add_subcommand("cutsets", "minimal cut and path sets");
  cutsets->add_option("--model", cut_model, "model file (JSON)")->required();

  std::string sim_model;
  double sim_time = 0.0;
  std::uint64_t sim_trials = 100000;
  std::uint64_t sim_seed = 42;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of analytic values");
  simulate->add_option("--model", sim_model, "model file (JSON)")->required();
  simulate->add_option("--time", sim_time, "horizon in hours")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--trials", sim_trials, "number of trials");
  simulate->add_option("--seed", sim_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (double s : aopt.spreads)
      if (!(s >= 0.0 && s < 1.0))
        throw std::invalid_argument("--spread must lie in [0, 1), got " +
                                    lamtau::format_double(s));
    if (*analyze) return run_analyze(aopt);
    if (*cutsets) return run_cutsets(cut_model);
    if (*simulate) return run_simulate(sim_model, sim_time, sim_trials, sim_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
