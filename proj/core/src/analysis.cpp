// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "coexact/errors.hpp"

namespace coexact {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void AnalysisConfig::validate() const {
  require(cutoff > 0.0 && std::isfinite(cutoff), "cutoff must be positive");
  require(n >= 0, "n must be nonnegative");
  const double d = resolved_delta();
  require(d > 0.0 && std::isfinite(d), "delta must be positive");
  require(SincSplineFamily(d, n).fits_cutoff(cutoff), "delta * (2n + 4) must not exceed the cutoff");
  require(t_lo >= 0.0 && t_hi > t_lo, "window must satisfy 0 <= lo < hi");
  require(grid_step > 0.0, "grid step must be positive");
  require(bisection_tol > 0.0, "bisection tolerance must be positive");
  require(level > 0.0, "level must be positive");
  require(s_tilde_inf < 0.0, "s-tilde must be negative");
  require(naive_threshold > 0.0, "naive threshold must be positive");
  require(bump_scale > 0.0, "bump scale must be positive");
  require(curve_stride >= 1, "curve stride must be at least 1");
}

void to_json(json& j, const AnalysisConfig& c) {
  j = json{{"cutoff", c.cutoff},
           {"n", c.n},
           {"delta", c.resolved_delta()},
           {"t_window", {c.t_lo, c.t_hi}},
           {"grid_step", c.grid_step},
           {"bisection_tol", c.bisection_tol},
           {"level", c.level},
           {"s_tilde_inf", c.s_tilde_inf},
           {"naive_threshold", c.naive_threshold},
           {"bump_scale", c.bump_scale},
           {"curve_stride", c.curve_stride}};
}

void to_json(json& j, const TraceEvaluation& e) {
  j = json{{"identity_term", e.identity_term},
           {"trivial_rep_term", e.trivial_rep_term},
           {"regular_sum", e.regular_sum},
           {"spectral_sum", e.spectral_sum},
           {"magnitude", e.magnitude},
           {"term_count", e.term_count},
           {"truncation_flag", e.truncation_flag}};
}

void to_json(json& j, const GramDiagnostics& d) {
  j = json{{"trace", d.trace},
           {"min_eigenvalue", d.min_eigenvalue},
           {"max_eigenvalue", d.max_eigenvalue},
           {"condition_estimate", d.condition_estimate},
           {"positive_semidefinite", d.positive_semidefinite}};
}

void to_json(json& j, const Interval& iv) {
  j = json{{"lo", iv.lo}, {"hi", iv.hi}, {"lo_at_edge", iv.lo_at_edge}, {"hi_at_edge", iv.hi_at_edge}};
}

void to_json(json& j, const ThresholdIntervals& t) {
  j = json{{"level", t.level},
           {"window", {t.window_lo, t.window_hi}},
           {"tolerance", t.tolerance},
           {"intervals", t.intervals}};
}

void to_json(json& j, const Verdict& v) {
  j = json{{"kind", to_string(v.kind)},
           {"sw_threshold_t", v.sw_threshold_t},
           {"below_threshold", v.below_threshold},
           {"caveats", v.caveats}};
  if (v.lambda1_window) {
    j["lambda1_window"] = {v.lambda1_window->first, v.lambda1_window->second};
  } else {
    j["lambda1_window"] = nullptr;
  }
}

void to_json(json& j, const NaiveExclusion& n) {
  j = json{{"spectral_sum", n.spectral_sum},
           {"threshold", n.threshold},
           {"window_t", n.window_t},
           {"min_fourier_on_window", n.min_fourier_on_window},
           {"below_threshold", n.below_threshold},
           {"certified", n.certified},
           {"evaluation", n.evaluation}};
}

json manifold_summary(const ManifoldData& m) {
  json j{{"label", m.label},
         {"volume", m.volume},
         {"cutoff", m.cutoff},
         {"entries", m.geodesics.size()},
         {"primitives_only", m.primitives_only},
         {"orientation_factor", m.orientation_factor}};
  j["injectivity_radius"] = m.injectivity_radius ? json(*m.injectivity_radius) : json(nullptr);
  return j;
}

json analyze(const ManifoldData& manifold, const AnalysisConfig& config, bool known_non_l_space) {
  config.validate();
  json timings;
  json warnings = json::array();
  const auto start = Clock::now();

  const GeometricData data = GeometricData::from(manifold);
  const SincSplineFamily family = config.family();
  if (!family.fits_cutoff(data.cutoff)) {
    throw SupportError("family support " + std::to_string(family.square_support_radius()) +
                       " exceeds the manifold's spectrum cutoff " + std::to_string(data.cutoff));
  }
  // c_t vanishes identically at the first zero of sinc(δt).
  if (config.t_hi >= std::numbers::pi / family.delta()) {
    warnings.push_back("scan window reaches the first zero of sinc(delta t); J is infinite there");
  }
  timings["prepare_ms"] = elapsed_ms(start);

  auto stage = Clock::now();
  GramSystem gram = gram_matrix(data, family);
  const GramDiagnostics diag = diagnose(gram);
  timings["gram_ms"] = elapsed_ms(stage);

  std::vector<double> e0(family.size(), 0.0);
  e0[0] = 1.0;
  const TraceEvaluation reference = geometric_side(data, CombinedTestFunction(family, e0));

  stage = Clock::now();
  const ExclusionSolver solver(std::move(gram));
  const ExclusionCurve curve = scan(solver, config.t_lo, config.t_hi, config.grid_step);
  timings["scan_ms"] = elapsed_ms(stage);

  stage = Clock::now();
  const ThresholdIntervals intervals =
      threshold_intervals(solver, curve, config.level, config.bisection_tol);
  timings["bisection_ms"] = elapsed_ms(stage);

  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["config"] = config;
  report["manifold"] = manifold_summary(manifold);
  report["manifold"]["classes_with_iterates"] = data.lengths.size();
  report["trace"] = {{"translate_sums", solver.gram().translate_sums},
                     {"reference_square", reference}};
  report["gram"] = diag;

  json samples_t = json::array();
  json samples_j = json::array();
  for (std::size_t i = 0; i < curve.t_grid.size(); i += config.curve_stride) {
    samples_t.push_back(curve.t_grid[i]);
    samples_j.push_back(curve.j_values[i]);
  }
  const auto max_it = std::max_element(curve.j_values.begin(), curve.j_values.end());
  report["curve"] = {{"stride", config.curve_stride},
                     {"points", curve.t_grid.size()},
                     {"max_j", *max_it},
                     {"argmax_t", curve.t_grid[max_it - curve.j_values.begin()]},
                     {"t", samples_t},
                     {"j", samples_j}};
  report["possible_small_spectrum"] = intervals;

  if (config.level == 1.0) {
    const Verdict verdict = classify(intervals, known_non_l_space, config.s_tilde_inf);
    report["verdict"] = verdict;
    report["verdict"]["known_non_l_space"] = known_non_l_space;
  } else {
    report["verdict"] = nullptr;
    warnings.push_back("verdicts are only issued at level 1");
  }
  report["warnings"] = warnings;
  if (config.timings) {
    timings["total_ms"] = elapsed_ms(start);
    report["timings"] = timings;
  }
  return report;
}

void write_curve_csv(std::ostream& out, const ExclusionCurve& curve, double step) {
  const int decimals = std::max(3, static_cast<int>(std::ceil(-std::log10(step) - 1e-9)));
  char buffer[96];
  for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.*f, %.12g\n", decimals, curve.t_grid[i],
                  curve.j_values[i]);
    out << buffer;
  }
}

void write_curve_svg(std::ostream& out, const ExclusionCurve& curve, double level) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 40.0;
  const double t0 = curve.t_grid.front();
  const double t1 = curve.t_grid.back();
  double j_max = level;
  for (double j : curve.j_values) {
    if (std::isfinite(j)) j_max = std::max(j_max, j);
  }
  j_max *= 1.05;
  auto x_of = [&](double t) { return kMargin + (t - t0) / (t1 - t0) * (kWidth - 2 * kMargin); };
  auto y_of = [&](double j) {
    return kHeight - kMargin - std::min(j, j_max) / j_max * (kHeight - 2 * kMargin);
  };
  char buffer[128];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buffer, sizeof buffer,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"gray\" "
                "stroke-dasharray=\"4 4\"/>\n",
                x_of(t0), y_of(level), x_of(t1), y_of(level));
  out << buffer;
  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.2f,%.2f ", x_of(curve.t_grid[i]),
                  y_of(curve.j_values[i]));
    out << buffer;
  }
  out << "\"/>\n";
  std::snprintf(buffer, sizeof buffer, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">", kMargin,
                kMargin * 0.6);
  out << buffer << xml_escape(curve.label);
  std::snprintf(buffer, sizeof buffer, "  (J = %.3g dashed)</text>\n", level);
  out << buffer;
  out << "</svg>\n";
}

}  // namespace coexact
