// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coexact/exclusion.hpp"

namespace coexact {

enum class VerdictKind { MinimalLSpaceCertificate, Lambda1Window, Inconclusive };

std::string_view to_string(VerdictKind kind);

/// Attached to every verdict: the inputs are floating-point length spectra.
inline constexpr std::string_view kUncertifiedSpectrumCaveat =
    "input length spectrum not interval-certified";

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// √(-s̃/2): every irreducible Seiberg-Witten solution forces
  /// √λ₁* <= this value. √2 for the hyperbolic metric (s̃ = -4).
  double sw_threshold_t = 0.0;
  /// [lo², hi²] of the first interval meeting [0, sw_threshold_t].
  std::optional<std::pair<double, double>> lambda1_window;
  ThresholdIntervals possible_small_spectrum;
  /// possible_small_spectrum ∩ [0, sw_threshold_t].
  std::vector<Interval> below_threshold;
  std::vector<std::string> caveats;
};

/// Threshold t for a lower bound s_tilde_inf < 0 on the curvature quantity.
double sw_threshold(double s_tilde_inf);

/// Turns level-1 threshold intervals into a topological conclusion.
///
/// No interval below the threshold certifies λ₁* > -s̃/2, hence no
/// irreducible solutions. Otherwise a known non-L-space has λ₁* inside the
/// first interval below the threshold.
Verdict classify(const ThresholdIntervals& intervals, bool known_non_l_space,
                 double s_tilde_inf = -4.0);

}  // namespace coexact
