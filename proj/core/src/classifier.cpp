// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "coexact/errors.hpp"

namespace coexact {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::MinimalLSpaceCertificate:
      return "MinimalLSpaceCertificate";
    case VerdictKind::Lambda1Window:
      return "Lambda1Window";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

double sw_threshold(double s_tilde_inf) {
  if (!(s_tilde_inf < 0.0)) {
    throw ConfigError("s_tilde_inf must be negative; nonnegative curvature is not supported");
  }
  return std::sqrt(-s_tilde_inf / 2.0);
}

Verdict classify(const ThresholdIntervals& intervals, bool known_non_l_space, double s_tilde_inf) {
  const double tau = sw_threshold(s_tilde_inf);
  if (intervals.window_lo > 0.0 || intervals.window_hi < tau) {
    throw ConfigError("scan window [" + std::to_string(intervals.window_lo) + ", " +
                      std::to_string(intervals.window_hi) + "] does not cover [0, " +
                      std::to_string(tau) + "]");
  }

  Verdict verdict;
  verdict.sw_threshold_t = tau;
  verdict.possible_small_spectrum = intervals;
  verdict.caveats.emplace_back(kUncertifiedSpectrumCaveat);
  for (const auto& iv : intervals.intervals) {
    if (iv.lo <= tau) {
      Interval clipped = iv;
      if (clipped.hi > tau) {
        clipped.hi = tau;
        clipped.hi_at_edge = false;
      }
      verdict.below_threshold.push_back(clipped);
    }
  }

  if (verdict.below_threshold.empty()) {
    verdict.kind = VerdictKind::MinimalLSpaceCertificate;
  } else if (known_non_l_space) {
    verdict.kind = VerdictKind::Lambda1Window;
    const auto& first = verdict.below_threshold.front();
    verdict.lambda1_window = std::make_pair(first.lo * first.lo, first.hi * first.hi);
  } else {
    verdict.kind = VerdictKind::Inconclusive;
  }
  return verdict;
}

}  // namespace coexact
