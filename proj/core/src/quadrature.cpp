// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#include "coexact/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "coexact/compensated_sum.hpp"
#include "coexact/errors.hpp"

namespace coexact {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
using GaussRule = boost::math::quadrature::gauss<double, 15>;

constexpr std::size_t kMaxPanels = 4096;

struct Panel {
  double a;
  double b;
  QuadratureResult r;
  bool operator<(const Panel& other) const { return r.error < other.r.error; }
};

/// One Gauss-Kronrod panel with |K - G| as the error estimate. The Gauss
/// value is computed separately: Boost's own single-panel estimate is not
/// rescaled to [a, b] in older releases.
QuadratureResult panel(const RealFunction& f, double a, double b) {
  QuadratureResult r;
  r.value = Rule::integrate(f, a, b, 0, 0.0);
  const double gauss = GaussRule::integrate(f, a, b);
  r.error = std::max(std::abs(r.value - gauss), 2.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value));
  return r;
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, double a, double b, double abs_tol) {
  if (a == b) return {};
  // Global adaptivity: always split the panel with the largest error.
  std::priority_queue<Panel> panels;
  panels.push({a, b, panel(f, a, b)});
  double error = panels.top().r.error;
  while (error > abs_tol && panels.size() < kMaxPanels) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    panels.pop();
    const Panel left{worst.a, mid, panel(f, worst.a, mid)};
    const Panel right{mid, worst.b, panel(f, mid, worst.b)};
    error += left.r.error + right.r.error - worst.r.error;
    panels.push(left);
    panels.push(right);
  }
  CompensatedSum value;
  error = 0.0;
  for (; !panels.empty(); panels.pop()) {
    value += panels.top().r.value;
    error += panels.top().r.error;
  }
  const QuadratureResult result{value.value(), error};
  if (!std::isfinite(result.value)) {
    throw QuadratureError("quadrature produced a non-finite value", result.error);
  }
  if (result.error > abs_tol) {
    throw QuadratureError("quadrature did not converge: error estimate " +
                              std::to_string(result.error) + " exceeds tolerance " +
                              std::to_string(abs_tol),
                          result.error);
  }
  return result;
}

QuadratureResult integrate_panels(const RealFunction& f, double a, double b, double panel_width) {
  const auto panels = static_cast<long>(std::ceil((b - a) / panel_width));
  CompensatedSum total;
  double error = 0.0;
  for (long i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
    const double hi = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(panels);
    const QuadratureResult r = panel(f, lo, hi);
    total += r.value;
    error += r.error;
  }
  if (!std::isfinite(total.value())) {
    throw QuadratureError("panel quadrature produced a non-finite value", error);
  }
  return {total.value(), error};
}

}  // namespace coexact
