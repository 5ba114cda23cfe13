// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "coexact/classifier.hpp"
#include "coexact/exclusion.hpp"
#include "coexact/spectrum.hpp"
#include "coexact/trace_formula.hpp"

namespace coexact {

inline constexpr int kReportSchemaVersion = 1;

/// Every knob of the end-to-end pipeline. Defaults: R = 6.5, n = 19,
/// δ = R / (2n + 4), scan [0, 4] with step 1e-3, bisection to 1e-6.
struct AnalysisConfig {
  double cutoff = 6.5;
  int n = 19;
  std::optional<double> delta;
  double t_lo = 0.0;
  double t_hi = 4.0;
  double grid_step = 1e-3;
  double bisection_tol = 1e-6;
  double level = 1.0;
  double s_tilde_inf = -4.0;
  double naive_threshold = 0.01;
  double bump_scale = BumpSquare::kWindowScale;
  /// Keep every k-th curve sample in reports.
  int curve_stride = 10;
  bool timings = true;

  double resolved_delta() const { return delta.value_or(cutoff / (2 * n + 4)); }
  SincSplineFamily family() const { return SincSplineFamily(resolved_delta(), n); }
  /// Throws ConfigError on any violated constraint.
  void validate() const;
};

void to_json(nlohmann::json& j, const AnalysisConfig& config);
void to_json(nlohmann::json& j, const TraceEvaluation& eval);
void to_json(nlohmann::json& j, const GramDiagnostics& diag);
void to_json(nlohmann::json& j, const Interval& interval);
void to_json(nlohmann::json& j, const ThresholdIntervals& intervals);
void to_json(nlohmann::json& j, const Verdict& verdict);
void to_json(nlohmann::json& j, const NaiveExclusion& naive);

nlohmann::json manifold_summary(const ManifoldData& manifold);

/// Runs the full pipeline (Gram system, J scan, threshold intervals,
/// classification) and returns the versioned report.
nlohmann::json analyze(const ManifoldData& manifold, const AnalysisConfig& config,
                       bool known_non_l_space);

/// Two columns "t, J" without a header; t printed with enough decimals to
/// resolve the grid step.
void write_curve_csv(std::ostream& out, const ExclusionCurve& curve, double step);

/// Standalone SVG line plot of the curve with a dashed line at `level`.
void write_curve_svg(std::ostream& out, const ExclusionCurve& curve, double level);

}  // namespace coexact
