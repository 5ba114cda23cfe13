// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "coexact/errors.hpp"

namespace coexact {

namespace {

constexpr double kDegenerateConstraint = 1e-14;

/// Factors `a`, reporting the first leading minor that fails.
Eigen::LLT<Eigen::MatrixXd> factor_or_throw(const Eigen::MatrixXd& a) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() == Eigen::Success) return llt;
  int pivot = static_cast<int>(a.rows()) - 1;
  for (int k = 1; k <= a.rows(); ++k) {
    Eigen::LLT<Eigen::MatrixXd> leading(a.topLeftCorner(k, k));
    if (leading.info() != Eigen::Success) {
      pivot = k - 1;
      break;
    }
  }
  throw CholeskyError("Gram matrix is not positive definite (Cholesky pivot " +
                          std::to_string(pivot) + ")",
                      pivot);
}

}  // namespace

double constrained_minimum(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) {
  const auto llt = factor_or_throw(a);
  const Eigen::VectorXd y = llt.matrixL().solve(c);
  return 1.0 / y.squaredNorm();
}

ExclusionSolver::ExclusionSolver(GramSystem gram, double ridge)
    : gram_(std::move(gram)), ridge_(ridge) {
  if (ridge < 0.0) throw ConfigError("ridge must be nonnegative");
  Eigen::MatrixXd a = gram_.matrix;
  if (ridge_ > 0.0) {
    a.diagonal().array() += ridge_ * a.trace() / static_cast<double>(a.rows());
  }
  factor_ = factor_or_throw(a);
}

JValue ExclusionSolver::j_value_for(const Eigen::VectorXd& c) const {
  if (c.cwiseAbs().maxCoeff() < kDegenerateConstraint) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  // <A^{-1} c, c> = |L^{-1} c|² for A = L L^T.
  const Eigen::VectorXd y = factor_.matrixL().solve(c);
  return {1.0 / y.squaredNorm(), false};
}

JValue ExclusionSolver::j_value(double t) const {
  return j_value_for(constraint_vector(gram_.family, t));
}

ExclusionCurve scan(const ExclusionSolver& solver, double t_min, double t_max, double step) {
  if (!(t_min >= 0.0) || !(t_max > t_min)) throw ConfigError("scan window must satisfy 0 <= lo < hi");
  if (!(step > 0.0)) throw ConfigError("scan step must be positive");
  ExclusionCurve curve;
  curve.cutoff = solver.gram().family.square_support_radius();
  curve.n = solver.gram().family.n();
  curve.delta = solver.gram().family.delta();
  curve.label = solver.gram().label;

  const auto steps = static_cast<long>(std::floor((t_max - t_min) / step + 1e-9));
  for (long i = 0; i <= steps; ++i) curve.t_grid.push_back(t_min + static_cast<double>(i) * step);
  if (t_max - curve.t_grid.back() > 1e-12 * std::max(1.0, t_max)) {
    curve.t_grid.push_back(t_max);
  } else {
    curve.t_grid.back() = t_max;
  }
  curve.j_values.reserve(curve.t_grid.size());
  for (double t : curve.t_grid) curve.j_values.push_back(solver.j_value(t).value);
  return curve;
}

namespace {

/// Shrinks [outside, inside] (in either order) around J = level until its
/// width is at most tol, returning the end on the outside.
double bisect(const ExclusionSolver& solver, double outside, double inside, double level,
              double tol) {
  while (std::abs(inside - outside) > tol) {
    const double mid = 0.5 * (outside + inside);
    if (mid == outside || mid == inside) break;
    (solver.j_value(mid).value >= level ? inside : outside) = mid;
  }
  return outside;
}

}  // namespace

ThresholdIntervals threshold_intervals(const ExclusionSolver& solver, const ExclusionCurve& curve,
                                       double level, double tol) {
  if (!(level > 0.0)) throw ConfigError("threshold level must be positive");
  if (!(tol > 0.0)) throw ConfigError("bisection tolerance must be positive");
  if (curve.t_grid.empty()) throw ConfigError("empty scan");

  ThresholdIntervals result;
  result.level = level;
  result.tolerance = tol;
  result.window_lo = curve.t_grid.front();
  result.window_hi = curve.t_grid.back();

  const auto& t = curve.t_grid;
  const auto& j = curve.j_values;
  std::optional<Interval> open;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool inside = j[i] >= level;
    if (inside && !open) {
      Interval iv;
      if (i == 0) {
        iv.lo = t[0];
        iv.lo_at_edge = true;
      } else {
        iv.lo = bisect(solver, t[i - 1], t[i], level, tol);
      }
      open = iv;
    } else if (!inside && open) {
      open->hi = bisect(solver, t[i], t[i - 1], level, tol);
      result.intervals.push_back(*open);
      open.reset();
    }
  }
  if (open) {
    open->hi = t.back();
    open->hi_at_edge = true;
    result.intervals.push_back(*open);
  }
  return result;
}

ThresholdIntervals threshold_intervals(const ExclusionSolver& solver, double t_min, double t_max,
                                       double step, double level, double tol) {
  return threshold_intervals(solver, scan(solver, t_min, t_max, step), level, tol);
}

NaiveExclusion naive_exclusion(const GeometricData& data, const TestFunction& h0,
                               double threshold, double window_t, double grid_step) {
  if (!h0.is_convolution_square()) {
    throw ConfigError("naive exclusion needs a convolution square (nonnegative Fourier transform)");
  }
  if (!(grid_step > 0.0) || !(window_t >= 0.0)) throw ConfigError("invalid naive exclusion grid");
  NaiveExclusion out;
  out.threshold = threshold;
  out.window_t = window_t;
  out.evaluation = geometric_side(data, h0);
  out.spectral_sum = out.evaluation.spectral_sum;

  double min_fourier = std::numeric_limits<double>::infinity();
  const auto steps = static_cast<long>(std::ceil(window_t / grid_step));
  for (long i = 0; i <= steps; ++i) {
    const double t = std::min(window_t, static_cast<double>(i) * grid_step);
    min_fourier = std::min(min_fourier, h0.fourier_at(t));
  }
  out.min_fourier_on_window = min_fourier;
  out.below_threshold = out.spectral_sum < threshold;
  out.certified = out.below_threshold && min_fourier > out.spectral_sum;
  return out;
}

}  // namespace coexact
