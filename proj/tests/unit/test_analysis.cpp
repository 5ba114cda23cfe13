// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "coexact/analysis.hpp"
#include "coexact/errors.hpp"
#include "oracles.hpp"

namespace coexact {
namespace {

AnalysisConfig config_r5() {
  AnalysisConfig c;
  c.cutoff = 5.0;
  c.timings = false;
  return c;
}

TEST(Config, Validation) {
  AnalysisConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_DOUBLE_EQ(c.resolved_delta(), 6.5 / 42);
  c.delta = 0.2;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AnalysisConfig{};
  c.t_hi = c.t_lo;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AnalysisConfig{};
  c.s_tilde_inf = 0.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AnalysisConfig{};
  c.grid_step = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Analyze, ReportStructure) {
  const ManifoldData m = load_manifold(oracle::fixture("census0_r5.json"));
  const nlohmann::json r = analyze(m, config_r5(), false);
  EXPECT_EQ(r["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r["config"]["cutoff"], 5.0);
  EXPECT_EQ(r["config"]["n"], 19);
  EXPECT_EQ(r["config"]["level"], 1.0);
  EXPECT_EQ(r["manifold"]["label"], m.label);
  EXPECT_EQ(r["trace"]["translate_sums"].size(), 39u);
  EXPECT_TRUE(r["gram"]["positive_semidefinite"].get<bool>());
  EXPECT_EQ(r["curve"]["points"], 4001);
  EXPECT_EQ(r["curve"]["t"].size(), 401u);
  EXPECT_EQ(r["verdict"]["kind"], "MinimalLSpaceCertificate");
  EXPECT_FALSE(r.contains("timings"));
  EXPECT_TRUE(r["warnings"].empty());
}

TEST(Analyze, Deterministic) {
  const ManifoldData m = load_manifold(oracle::fixture("census1_r5.json"));
  EXPECT_EQ(analyze(m, config_r5(), true).dump(), analyze(m, config_r5(), true).dump());
}

TEST(Analyze, NonLSpaceWindow) {
  const ManifoldData m = load_manifold(oracle::fixture("census1_r5.json"));
  const nlohmann::json r = analyze(m, config_r5(), true);
  EXPECT_EQ(r["verdict"]["kind"], "Lambda1Window");
  const auto& w = r["verdict"]["lambda1_window"];
  const auto& first = r["possible_small_spectrum"]["intervals"][0];
  EXPECT_EQ(w[0].get<double>(), first["lo"].get<double>() * first["lo"].get<double>());
  EXPECT_EQ(w[1].get<double>(), first["hi"].get<double>() * first["hi"].get<double>());
}

TEST(Analyze, OtherLevelsCarryNoVerdict) {
  AnalysisConfig c = config_r5();
  c.level = 2.0;
  const nlohmann::json r = analyze(load_manifold(oracle::fixture("census0_r5.json")), c, false);
  EXPECT_TRUE(r["verdict"].is_null());
  EXPECT_FALSE(r["warnings"].empty());
}

TEST(Analyze, EmptySpectrumFlowsThrough) {
  AnalysisConfig c;
  c.timings = false;
  const nlohmann::json r = analyze(load_manifold(oracle::fixture("empty.json")), c, false);
  const bool any_above = r["curve"]["max_j"].get<double>() >= 1.0;
  EXPECT_EQ(r["possible_small_spectrum"]["intervals"].empty(), !any_above);
}

TEST(Analyze, CutoffMismatchIsRejected) {
  AnalysisConfig c;  // R = 6.5 against a cutoff-5 spectrum
  EXPECT_THROW(analyze(load_manifold(oracle::fixture("census0_r5.json")), c, false), SupportError);
}

TEST(Output, CsvAndSvg) {
  ExclusionCurve curve;
  curve.t_grid = {0.0, 0.001, 0.002};
  curve.j_values = {0.25, 0.5, 1.5};
  curve.label = "a<b & \"c\"";
  std::ostringstream csv;
  write_curve_csv(csv, curve, 1e-3);
  EXPECT_EQ(csv.str(), "0.000, 0.25\n0.001, 0.5\n0.002, 1.5\n");
  std::ostringstream fine;
  write_curve_csv(fine, curve, 1e-5);
  EXPECT_EQ(fine.str().substr(0, 9), "0.00000, ");
  std::ostringstream svg;
  write_curve_svg(svg, curve, 1.0);
  EXPECT_NE(svg.str().find("a&lt;b &amp; &quot;c&quot;"), std::string::npos);
  EXPECT_EQ(svg.str().find("a<b"), std::string::npos);
}

}  // namespace
}  // namespace coexact
