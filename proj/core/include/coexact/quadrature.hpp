// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace coexact {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (31-point) on [a, b]: the panel with the
/// largest error estimate is halved until the summed estimate is below
/// `abs_tol`. Throws QuadratureError if that fails within 4096 panels.
QuadratureResult integrate(const RealFunction& f, double a, double b, double abs_tol = 1e-12);

/// One 31-point Gauss-Kronrod rule per panel of width at most `panel_width`,
/// for long, oscillatory ranges. Errors are accumulated, not checked.
QuadratureResult integrate_panels(const RealFunction& f, double a, double b, double panel_width);

}  // namespace coexact
