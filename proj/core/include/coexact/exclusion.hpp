// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "coexact/test_functions.hpp"
#include "coexact/trace_formula.hpp"

namespace coexact {

/// min <Ax, x> subject to <c, x> = 1, which is 1 / <A^{-1} c, c> for A
/// positive definite. Throws CholeskyError if A is not.
double constrained_minimum(const Eigen::MatrixXd& a, const Eigen::VectorXd& c);

struct JValue {
  double value = 0.0;
  bool degenerate = false;  ///< c_t vanished; value is +infinity
};

/// Evaluates J(t) = 1 / <A^{-1} c_t, c_t> for a fixed Gram system. A is
/// factored once; each evaluation is a single triangular solve.
class ExclusionSolver {
 public:
  /// `ridge` > 0 adds ridge * trace(A) / (n + 1) to the diagonal. Results are
  /// then exploratory only (certifying() is false).
  explicit ExclusionSolver(GramSystem gram, double ridge = 0.0);

  JValue j_value(double t) const;
  /// j_value with a prebuilt constraint vector.
  JValue j_value_for(const Eigen::VectorXd& c) const;

  const GramSystem& gram() const { return gram_; }
  bool certifying() const { return ridge_ == 0.0; }
  double ridge() const { return ridge_; }

 private:
  GramSystem gram_;
  double ridge_;
  Eigen::LLT<Eigen::MatrixXd> factor_;
};

struct ExclusionCurve {
  std::vector<double> t_grid;
  std::vector<double> j_values;
  double cutoff = 0.0;
  int n = 0;
  double delta = 0.0;
  std::string label;
};

/// J on the uniform grid t_min + i * step, with t_max appended if the grid
/// does not land on it.
ExclusionCurve scan(const ExclusionSolver& solver, double t_min = 0.0, double t_max = 4.0,
                    double step = 1e-3);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_at_edge = false;  ///< starts at the window's lower edge
  bool hi_at_edge = false;  ///< runs into the window's upper edge
};

struct ThresholdIntervals {
  double level = 1.0;
  double window_lo = 0.0;
  double window_hi = 4.0;
  double tolerance = 1e-6;
  std::vector<Interval> intervals;
};

/// {t in window : J(t) >= level}, with crossings refined by bisection to
/// `tol` starting from the brackets found on `curve`.
ThresholdIntervals threshold_intervals(const ExclusionSolver& solver, const ExclusionCurve& curve,
                                       double level = 1.0, double tol = 1e-6);

/// Scans [t_min, t_max] with `step` first.
ThresholdIntervals threshold_intervals(const ExclusionSolver& solver, double t_min, double t_max,
                                       double step, double level = 1.0, double tol = 1e-6);

struct NaiveExclusion {
  double spectral_sum = 0.0;
  double threshold = 0.01;
  double window_t = 0.0;           ///< sqrt of the eigenvalue bound (√2 by default)
  double min_fourier_on_window = 0.0;  ///< min Ĥ_0 over [0, window_t]
  bool below_threshold = false;    ///< spectral_sum < threshold
  bool certified = false;          ///< below_threshold and min Ĥ_0 > spectral_sum
  TraceEvaluation evaluation;
};

/// Single-function exclusion: if Σ Ĥ_0(t_j) < Ĥ_0(t) for every t in
/// [0, window_t], no t_j lies there.
NaiveExclusion naive_exclusion(const GeometricData& data, const TestFunction& h0,
                               double threshold = 0.01, double window_t = 1.4142135623730951,
                               double grid_step = 1e-3);

}  // namespace coexact
