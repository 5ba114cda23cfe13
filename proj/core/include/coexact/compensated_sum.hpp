// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace coexact {

/// Neumaier's variant of Kahan summation. Also keeps the L1 mass of the
/// addends so callers can scale tolerances by it.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::abs(value);
    return *this;
  }

  double value() const { return sum_ + compensation_; }
  double magnitude() const { return magnitude_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace coexact
