// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/trace_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <Eigen/Eigenvalues>

#include "coexact/compensated_sum.hpp"
#include "coexact/errors.hpp"

namespace coexact {

namespace {

constexpr double kSupportSlack = 1e-12;

struct Partial {
  double value = 0.0;
  double magnitude = 0.0;
};

Partial sum_range(const GeometricData& data, const TestFunction& h, std::size_t begin,
                  std::size_t end) {
  CompensatedSum sum;
  for (std::size_t i = begin; i < end; ++i) sum += data.weights[i] * h.value_at(data.lengths[i]);
  return {sum.value(), sum.magnitude()};
}

/// Sums chunk by chunk, then combines the partials in chunk order so the
/// result does not depend on thread scheduling.
Partial sum_chunked(const GeometricData& data, const TestFunction& h, std::size_t count,
                    std::size_t chunk_size) {
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<Partial> partials(chunks);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), chunks));
  auto work = [&](std::size_t worker) {
    for (std::size_t c = worker; c < chunks; c += workers) {
      partials[c] = sum_range(data, h, c * chunk_size, std::min(count, (c + 1) * chunk_size));
    }
  };
  std::vector<std::jthread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  threads.clear();

  CompensatedSum total;
  double magnitude = 0.0;
  for (const auto& p : partials) {
    total += p.value;
    magnitude += p.magnitude;
  }
  return {total.value(), magnitude};
}

}  // namespace

GeometricData GeometricData::from(const ManifoldData& manifold) {
  validate(manifold);
  const ManifoldData all = with_all_iterates(manifold);
  GeometricData data;
  data.label = all.label;
  data.volume = all.volume;
  data.cutoff = all.cutoff;
  data.lengths.reserve(all.geodesics.size());
  data.weights.reserve(all.geodesics.size());
  for (const auto& g : all.geodesics) {
    data.lengths.push_back(g.length);
    data.weights.push_back(geodesic_weight(g, all.orientation_factor));
  }
  return data;
}

TraceEvaluation geometric_side(const GeometricData& data, const TestFunction& h,
                               const EvaluationOptions& options) {
  const double support = h.support_radius();
  TraceEvaluation eval;
  eval.truncation_flag = support > data.cutoff * (1.0 + kSupportSlack);
  if (eval.truncation_flag && !options.allow_truncation) {
    throw SupportError("test function support " + std::to_string(support) +
                       " exceeds the spectrum cutoff " + std::to_string(data.cutoff));
  }

  const auto end = std::upper_bound(data.lengths.begin(), data.lengths.end(), support);
  const auto count = static_cast<std::size_t>(end - data.lengths.begin());
  const Partial regular = options.chunk_size == 0 ? sum_range(data, h, 0, count)
                                                  : sum_chunked(data, h, count, options.chunk_size);

  const double h0 = h.value_at(0.0);
  const double h2 = h.second_derivative_at_zero();
  const double fourier0 = h.fourier_at(0.0);
  eval.identity_term = data.volume / (2.0 * std::numbers::pi) * (h0 - h2);
  eval.trivial_rep_term = 0.5 * fourier0;
  eval.regular_sum = regular.value;
  eval.term_count = count;

  CompensatedSum total;
  total += 2.0 * eval.identity_term;
  total += 2.0 * eval.regular_sum;
  total += fourier0;
  eval.spectral_sum = total.value();
  eval.magnitude = 2.0 * std::abs(eval.identity_term) + 2.0 * regular.magnitude + std::abs(fourier0);

  if (!std::isfinite(eval.spectral_sum)) throw NumericalError("non-finite spectral sum");
  return eval;
}

TraceEvaluation geometric_side(const ManifoldData& manifold, const TestFunction& h,
                               const EvaluationOptions& options) {
  return geometric_side(GeometricData::from(manifold), h, options);
}

double spectral_sum(const GeometricData& data, const TestFunction& h,
                    const EvaluationOptions& options) {
  return geometric_side(data, h, options).spectral_sum;
}

double spectral_sum(const ManifoldData& manifold, const TestFunction& h,
                    const EvaluationOptions& options) {
  return geometric_side(manifold, h, options).spectral_sum;
}

GramSystem gram_from_translate_sums(const SincSplineFamily& family,
                                    std::span<const double> translate_sums, std::string label) {
  const int n = family.n();
  if (static_cast<int>(translate_sums.size()) != 2 * n + 1) {
    throw std::invalid_argument("expected " + std::to_string(2 * n + 1) + " translate sums");
  }
  GramSystem gram{Eigen::MatrixXd(n + 1, n + 1), family, std::move(label),
                  std::vector<double>(translate_sums.begin(), translate_sums.end())};
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const double entry = 0.5 * (translate_sums[a + b] + translate_sums[std::abs(a - b)]);
      if (!std::isfinite(entry)) {
        throw NumericalError("non-finite Gram entry (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
      }
      gram.matrix(a, b) = entry;
    }
  }
  gram.matrix = 0.5 * (gram.matrix + gram.matrix.transpose()).eval();
  return gram;
}

GramSystem gram_matrix(const GeometricData& data, const SincSplineFamily& family) {
  if (!family.fits_cutoff(data.cutoff)) {
    throw SupportError("family support (2n+4)*delta = " +
                       std::to_string(family.square_support_radius()) + " exceeds cutoff " +
                       std::to_string(data.cutoff));
  }
  std::vector<double> sums(2 * family.n() + 1);
  for (int s = 0; s <= 2 * family.n(); ++s) {
    sums[s] = spectral_sum(data, SplineTranslate(family, s));
  }
  return gram_from_translate_sums(family, sums, data.label);
}

GramSystem gram_matrix(const ManifoldData& manifold, const SincSplineFamily& family) {
  return gram_matrix(GeometricData::from(manifold), family);
}

GramDiagnostics diagnose(const GramSystem& gram) {
  GramDiagnostics d;
  d.trace = gram.matrix.trace();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram.matrix, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  d.max_eigenvalue = solver.eigenvalues().maxCoeff();
  d.condition_estimate = d.min_eigenvalue > 0.0 ? d.max_eigenvalue / d.min_eigenvalue
                                                : std::numeric_limits<double>::infinity();
  d.positive_semidefinite = d.min_eigenvalue > -1e-10 * std::abs(d.trace);
  return d;
}

}  // namespace coexact
