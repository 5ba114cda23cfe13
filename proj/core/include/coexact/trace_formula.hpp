// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "coexact/spectrum.hpp"
#include "coexact/test_functions.hpp"

namespace coexact {

/// Both sides of the coexact 1-form trace formula for one test function H:
///
///   ½ Σ_j Ĥ(t_j) - ½ Ĥ(0) = vol/(2π) (H(0) - H''(0)) + Σ_[γ] w(γ) H(ℓ(γ)).
struct TraceEvaluation {
  double identity_term = 0.0;     ///< vol/(2π) (H(0) - H''(0))
  double trivial_rep_term = 0.0;  ///< ½ Ĥ(0), moved to the geometric side
  double regular_sum = 0.0;       ///< Σ w(γ) H(ℓ(γ))
  double spectral_sum = 0.0;      ///< Σ_j Ĥ(t_j), with multiplicity
  /// L1 mass of everything added into spectral_sum; scale for tolerances.
  double magnitude = 0.0;
  std::size_t term_count = 0;     ///< geodesic terms inside the support
  bool truncation_flag = false;   ///< support reaches past the cutoff
};

/// Per-class weights, precomputed once per manifold. Entries are sorted by
/// length and include every iterate.
struct GeometricData {
  std::string label;
  double volume = 0.0;
  double cutoff = 0.0;
  std::vector<double> lengths;
  std::vector<double> weights;

  static GeometricData from(const ManifoldData& manifold);
};

struct EvaluationOptions {
  /// Permit H with support beyond the cutoff; the result is then a
  /// truncation and carries truncation_flag.
  bool allow_truncation = false;
  /// Geodesic terms per chunk for threaded evaluation; 0 means serial.
  /// Results are bitwise reproducible for a fixed chunk size.
  std::size_t chunk_size = 0;
};

TraceEvaluation geometric_side(const GeometricData& data, const TestFunction& h,
                               const EvaluationOptions& options = {});
TraceEvaluation geometric_side(const ManifoldData& manifold, const TestFunction& h,
                               const EvaluationOptions& options = {});

/// Σ_j Ĥ(t_j) via the geometric side.
double spectral_sum(const GeometricData& data, const TestFunction& h,
                    const EvaluationOptions& options = {});
double spectral_sum(const ManifoldData& manifold, const TestFunction& h,
                    const EvaluationOptions& options = {});

/// A_ab = Σ_j ĥ_a(t_j) ĥ_b(t_j), so that <Ax, x> = Σ_j (Σ_k x_k ĥ_k(t_j))².
struct GramSystem {
  Eigen::MatrixXd matrix;
  SincSplineFamily family;
  std::string label;
  /// S_s = Σ_j Ĝ_s(t_j) for the translates G_s, s = 0..2n.
  std::vector<double> translate_sums;
};

/// Builds A from the 2n + 1 translate sums, A_ab = (S_{a+b} + S_{|a-b|}) / 2.
/// Throws SupportError unless (2n + 4)δ <= cutoff.
GramSystem gram_matrix(const GeometricData& data, const SincSplineFamily& family);
GramSystem gram_matrix(const ManifoldData& manifold, const SincSplineFamily& family);

/// Assembles a Gram system from externally supplied translate sums (e.g. a
/// planted spectrum). Requires 2n + 1 values.
GramSystem gram_from_translate_sums(const SincSplineFamily& family,
                                    std::span<const double> translate_sums, std::string label);

struct GramDiagnostics {
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double condition_estimate = 0.0;  ///< max/min eigenvalue; inf if min <= 0
  bool positive_semidefinite = false;  ///< min eigenvalue > -1e-10 trace
};

GramDiagnostics diagnose(const GramSystem& gram);

}  // namespace coexact
