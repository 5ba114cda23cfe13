// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

// coexact: command-line front end for the coexact 1-form trace formula and
// the eigenvalue exclusion pipeline.
//
//   coexact analyze  --manifold M.json [--non-l-space] [--out report.json]
//   coexact scan     --manifold M.json [--csv curve.csv] [--svg curve.svg]
//   coexact sum      --manifold M.json [--pair A B | --coeffs x0,x1,...]
//   coexact probe    --manifold M.json --a 0.7
//   coexact naive    --manifold M.json [--scale 0.4] [--naive 0.01]
//   coexact validate --manifold M.json
//
// Exit codes: 1 parse/validation, 2 numerical failure, 3 config violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coexact/analysis.hpp"
#include "coexact/errors.hpp"

namespace {

using nlohmann::json;
using namespace coexact;

constexpr int kExitParse = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitConfig = 3;

struct Options {
  std::string manifold;
  std::string out;
  std::string csv;
  std::string svg;
  std::string window = "0:4";
  AnalysisConfig config;
  double delta = 0.0;
  bool non_l_space = false;
  bool no_timings = false;
  // sum
  std::vector<int> pair;
  std::vector<double> coeffs;
  int translate = -1;
  // probe / naive
  double probe_a = 0.0;
};

void add_manifold(CLI::App* cmd, Options& opt) {
  cmd->add_option("--manifold,manifold", opt.manifold, "Manifold JSON document")->required();
}

void add_family(CLI::App* cmd, Options& opt) {
  cmd->add_option("--cutoff", opt.config.cutoff, "Support bound R for the test functions");
  cmd->add_option("--n", opt.config.n, "Highest translate index n");
  cmd->add_option("--delta", opt.delta, "Translate spacing (default R/(2n+4))");
}

void add_scan(CLI::App* cmd, Options& opt) {
  add_family(cmd, opt);
  cmd->add_option("--window", opt.window, "Scan window LO:HI");
  cmd->add_option("--step", opt.config.grid_step, "Scan grid step");
  cmd->add_option("--tol", opt.config.bisection_tol, "Bisection tolerance");
  cmd->add_option("--level", opt.config.level, "Threshold level for J");
}

void write_json(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

void resolve(Options& opt) {
  if (opt.delta > 0.0) opt.config.delta = opt.delta;
  const auto colon = opt.window.find(':');
  if (colon == std::string::npos) throw ConfigError("--window expects LO:HI");
  try {
    opt.config.t_lo = std::stod(opt.window.substr(0, colon));
    opt.config.t_hi = std::stod(opt.window.substr(colon + 1));
  } catch (const std::exception&) {
    throw ConfigError("--window expects LO:HI, got " + opt.window);
  }
  opt.config.timings = !opt.no_timings;
  opt.config.validate();
}

int run_analyze(Options& opt) {
  resolve(opt);
  const ManifoldData manifold = load_manifold(opt.manifold);
  write_json(analyze(manifold, opt.config, opt.non_l_space), opt.out);
  return 0;
}

int run_scan(Options& opt) {
  resolve(opt);
  const ManifoldData manifold = load_manifold(opt.manifold);
  const ExclusionSolver solver(gram_matrix(manifold, opt.config.family()));
  const ExclusionCurve curve = scan(solver, opt.config.t_lo, opt.config.t_hi, opt.config.grid_step);
  if (opt.csv.empty() && opt.svg.empty()) {
    write_curve_csv(std::cout, curve, opt.config.grid_step);
  }
  if (!opt.csv.empty()) {
    std::ofstream out(opt.csv);
    if (!out) throw ConfigError("cannot write " + opt.csv);
    write_curve_csv(out, curve, opt.config.grid_step);
  }
  if (!opt.svg.empty()) {
    std::ofstream out(opt.svg);
    if (!out) throw ConfigError("cannot write " + opt.svg);
    write_curve_svg(out, curve, opt.config.level);
  }
  return 0;
}

int run_sum(Options& opt) {
  resolve(opt);
  const ManifoldData manifold = load_manifold(opt.manifold);
  const SincSplineFamily family = opt.config.family();
  if (!family.fits_cutoff(manifold.cutoff)) {
    throw SupportError("family support exceeds the manifold's spectrum cutoff");
  }
  json report{{"schema_version", kReportSchemaVersion},
              {"config", opt.config},
              {"manifold", manifold_summary(manifold)}};
  TraceEvaluation eval;
  if (!opt.pair.empty()) {
    eval = geometric_side(manifold, PairConvolution(family, opt.pair[0], opt.pair[1]));
    report["test_function"] = {{"kind", "pair_convolution"}, {"a", opt.pair[0]}, {"b", opt.pair[1]}};
  } else if (opt.translate >= 0) {
    eval = geometric_side(manifold, SplineTranslate(family, opt.translate));
    report["test_function"] = {{"kind", "translate"}, {"shift", opt.translate}};
  } else {
    std::vector<double> x = opt.coeffs;
    if (x.empty()) {
      x.assign(family.size(), 0.0);
      x[0] = 1.0;
    }
    eval = geometric_side(manifold, CombinedTestFunction(family, x));
    report["test_function"] = {{"kind", "combined_square"}, {"coefficients", x}};
  }
  report["evaluation"] = eval;
  write_json(report, opt.out);
  return 0;
}

int run_probe(Options& opt) {
  const ManifoldData manifold = load_manifold(opt.manifold);
  const GaussianProbe probe(opt.probe_a);
  const TraceEvaluation eval = geometric_side(manifold, probe, {.allow_truncation = true});
  json report{{"schema_version", kReportSchemaVersion},
              {"manifold", manifold_summary(manifold)},
              {"probe_a", probe.a()},
              {"effective_radius_1e-12", probe.effective_radius(1e-12)},
              {"evaluation", eval},
              {"tail_bounded", false},
              {"indicates_t1_at_most_a", eval.spectral_sum > 0.0}};
  write_json(report, opt.out);
  return 0;
}

int run_naive(Options& opt) {
  const ManifoldData manifold = load_manifold(opt.manifold);
  const double window_t = sw_threshold(opt.config.s_tilde_inf);
  const BumpSquare h0(opt.config.bump_scale);
  const NaiveExclusion result = naive_exclusion(GeometricData::from(manifold), h0,
                                                opt.config.naive_threshold, window_t);
  json report{{"schema_version", kReportSchemaVersion},
              {"manifold", manifold_summary(manifold)},
              {"bump_scale", h0.scale()},
              {"support_radius", h0.support_radius()},
              {"naive", result}};
  write_json(report, opt.out);
  return 0;
}

int run_validate(Options& opt) {
  const ManifoldData manifold = load_manifold(opt.manifold);
  json report = manifold_summary(manifold);
  report["valid"] = true;
  report["entries_with_iterates"] = with_all_iterates(manifold).geodesics.size();
  write_json(report, opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coexact 1-form trace formula and eigenvalue exclusion"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline: J scan, intervals, verdict");
  add_manifold(analyze_cmd, opt);
  add_scan(analyze_cmd, opt);
  analyze_cmd->add_flag("--non-l-space", opt.non_l_space, "Manifold is known not to be an L-space");
  analyze_cmd->add_option("--s-tilde", opt.config.s_tilde_inf, "Lower bound of the curvature quantity");
  analyze_cmd->add_option("--stride", opt.config.curve_stride, "Keep every k-th curve sample");
  analyze_cmd->add_flag("--no-timings", opt.no_timings, "Omit wall-clock timings");
  analyze_cmd->add_option("--out", opt.out, "Report path (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "Write the J curve as CSV and/or SVG");
  add_manifold(scan_cmd, opt);
  add_scan(scan_cmd, opt);
  scan_cmd->add_option("--csv", opt.csv, "CSV output path");
  scan_cmd->add_option("--svg", opt.svg, "SVG output path");

  auto* sum_cmd = app.add_subcommand("sum", "Spectral sum for one family test function");
  add_manifold(sum_cmd, opt);
  add_family(sum_cmd, opt);
  auto* pair_opt = sum_cmd->add_option("--pair", opt.pair, "h_a * h_b")->expected(2);
  auto* coeff_opt =
      sum_cmd->add_option("--coeffs", opt.coeffs, "(sum x_k h_k)^{*2}")->delimiter(',');
  auto* translate_opt = sum_cmd->add_option("--translate", opt.translate, "Translate G_s");
  pair_opt->excludes(coeff_opt)->excludes(translate_opt);
  coeff_opt->excludes(translate_opt);
  sum_cmd->add_option("--out", opt.out, "Report path (default stdout)");

  auto* probe_cmd = app.add_subcommand("probe", "Truncated sum for the Gaussian probe H_a");
  add_manifold(probe_cmd, opt);
  probe_cmd->add_option("--a", opt.probe_a, "Probe parameter a > 0")->required();
  probe_cmd->add_option("--out", opt.out, "Report path (default stdout)");

  auto* naive_cmd = app.add_subcommand("naive", "Single bump-square exclusion test");
  add_manifold(naive_cmd, opt);
  naive_cmd->add_option("--scale", opt.config.bump_scale, "H_0(x) = (beta*beta)(scale x)");
  naive_cmd->add_option("--naive", opt.config.naive_threshold, "Spectral-sum threshold");
  naive_cmd->add_option("--s-tilde", opt.config.s_tilde_inf, "Lower bound of the curvature quantity");
  naive_cmd->add_option("--out", opt.out, "Report path (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a manifold document");
  add_manifold(validate_cmd, opt);
  validate_cmd->add_option("--out", opt.out, "Summary path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze_cmd) return run_analyze(opt);
    if (*scan_cmd) return run_scan(opt);
    if (*sum_cmd) return run_sum(opt);
    if (*probe_cmd) return run_probe(opt);
    if (*naive_cmd) return run_naive(opt);
    if (*validate_cmd) return run_validate(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
