// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace coexact {

/// An even, real test function H together with the data the trace formula
/// needs. Fourier convention: Ĥ(t) = ∫ H(x) e^{-itx} dx, so Ĥ(0) = ∫ H.
class TestFunction {
 public:
  virtual ~TestFunction() = default;

  virtual double value_at(double x) const = 0;
  virtual double second_derivative_at_zero() const = 0;
  virtual double fourier_at(double t) const = 0;
  virtual double fourier_derivative_at(double t) const = 0;
  /// Radius of the support; +infinity when H is not compactly supported.
  virtual double support_radius() const = 0;
  /// True when H is a convolution square, so Ĥ >= 0 everywhere.
  virtual bool is_convolution_square() const { return false; }
};

/// sin(u)/u, with a degree-6 Taylor polynomial for |u| < 1e-4.
double sinc(double u);
/// d/du sin(u)/u.
double sinc_derivative(double u);

/// Fourfold convolution of (1/2δ)·1_[-δ,δ]: the cubic cardinal B-spline with
/// knot spacing 2δ, normalized to unit mass. Supported on [-4δ, 4δ].
double bspline4_eval(double delta, double x);
/// Second derivative of bspline4_eval (piecewise linear, continuous).
double bspline4_second_derivative(double delta, double x);

/// The translates h_k(x) = (h(x - kδ) + h(x + kδ)) / 2 of the triangle
/// h = ((1/2δ) 1_[-δ,δ])^{*2}, for k = 0..n.
class SincSplineFamily {
 public:
  SincSplineFamily(double delta, int n);

  /// Largest spacing that keeps every combined square inside [-R, R].
  static SincSplineFamily for_cutoff(double cutoff, int n);

  double delta() const { return delta_; }
  int n() const { return n_; }
  int size() const { return n_ + 1; }
  /// Support radius (2n + 4)δ of every (Σ x_k h_k)^{*2}.
  double square_support_radius() const { return (2 * n_ + 4) * delta_; }
  bool fits_cutoff(double cutoff) const;

  /// The triangle h = b * b.
  double triangle(double x) const;

 private:
  double delta_;
  int n_;
};

/// h_k(x). Throws std::out_of_range unless 0 <= k <= n.
double family_member_eval(const SincSplineFamily& family, int k, double x);

/// (h_a * h_b)(x) = 1/4 Σ_{λ,μ=±1} (h*h)(x + (λa + μb)δ).
double pair_convolution_eval(const SincSplineFamily& family, int a, int b, double x);

/// The vector (ĥ_0(t), ..., ĥ_n(t)) with ĥ_k(t) = sinc(δt)^2 cos(kδt).
Eigen::VectorXd constraint_vector(const SincSplineFamily& family, double t);

/// G_s(x) = ((h*h)(x + sδ) + (h*h)(x - sδ)) / 2 for 0 <= s <= 2n. Every
/// h_a * h_b is (G_{a+b} + G_{|a-b|}) / 2, so these 2n + 1 functions span the
/// whole Gram system.
class SplineTranslate final : public TestFunction {
 public:
  SplineTranslate(const SincSplineFamily& family, int shift);

  double value_at(double x) const override;
  double second_derivative_at_zero() const override;
  double fourier_at(double t) const override;
  double fourier_derivative_at(double t) const override;
  double support_radius() const override;

 private:
  double delta_;
  int shift_;
};

/// h_a * h_b as a test function. Ĥ = ĥ_a ĥ_b is not sign-definite for a != b.
class PairConvolution final : public TestFunction {
 public:
  PairConvolution(const SincSplineFamily& family, int a, int b);

  double value_at(double x) const override;
  double second_derivative_at_zero() const override;
  double fourier_at(double t) const override;
  double fourier_derivative_at(double t) const override;
  double support_radius() const override;
  bool is_convolution_square() const override { return a_ == b_; }

 private:
  SincSplineFamily family_;
  int a_;
  int b_;
};

/// H = (Σ x_k h_k)^{*2}.
class CombinedTestFunction final : public TestFunction {
 public:
  CombinedTestFunction(const SincSplineFamily& family, std::span<const double> coefficients);

  double value_at(double x) const override;
  double second_derivative_at_zero() const override;
  double fourier_at(double t) const override;
  double fourier_derivative_at(double t) const override;
  double support_radius() const override;
  bool is_convolution_square() const override { return true; }

  const SincSplineFamily& family() const { return family_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  /// Weights w_s with H = Σ_s w_s G_s, s = 0..2n.
  const std::vector<double>& translate_weights() const { return translate_weights_; }

 private:
  /// Σ x_k ĥ_k(t) and its t-derivative.
  std::pair<double, double> root_fourier(double t) const;

  SincSplineFamily family_;
  std::vector<double> coefficients_;
  std::vector<double> translate_weights_;
};

CombinedTestFunction combined_test_function(const SincSplineFamily& family,
                                            std::span<const double> coefficients);

/// β(u) = exp(-1/(1 - u^2)) on (-1, 1), zero elsewhere.
double bump(double u);

/// H_0(x) = (β*β)(scale·x), supported on |x| <= 2/scale. Values come from
/// adaptive quadrature; Ĥ_0(t) = β̂(t/scale)^2 / scale.
class BumpSquare final : public TestFunction {
 public:
  /// H_0(x) = β*β(5x/2) read literally: support [-0.8, 0.8].
  static constexpr double kLiteralScale = 2.5;
  /// β*β(2x/5): support [-5, 5], matching the sampling window R = 5 used
  /// with the 0.01 naive threshold.
  static constexpr double kWindowScale = 0.4;

  explicit BumpSquare(double scale = kLiteralScale);

  double scale() const { return scale_; }

  double value_at(double x) const override;
  /// Central second differences at four step sizes, Richardson-extrapolated.
  double second_derivative_at_zero() const override;
  double fourier_at(double t) const override;
  double fourier_derivative_at(double t) const override;
  double support_radius() const override { return 2.0 / scale_; }
  bool is_convolution_square() const override { return true; }

 private:
  double scale_;
  double second_derivative_;
};

BumpSquare bump_square(double scale);

/// H_a(x) = (d²/dx² + a²) e^{-x²/2} = (x² - 1 + a²) e^{-x²/2}, with
/// Ĥ_a(t) = sqrt(2π) (a² - t²) e^{-t²/2}: positive exactly on |t| < a.
class GaussianProbe final : public TestFunction {
 public:
  explicit GaussianProbe(double a);

  double a() const { return a_; }

  double value_at(double x) const override;
  double second_derivative_at_zero() const override;
  double fourier_at(double t) const override;
  double fourier_derivative_at(double t) const override;
  double support_radius() const override { return std::numeric_limits<double>::infinity(); }

  /// Smallest x with |H_a(y)| < eps for all y >= x.
  double effective_radius(double eps) const;

 private:
  double a_;
};

GaussianProbe gaussian_probe(double a);

/// Weighted Sobolev-type norm ∫_{-W}^{W} (Ĥ² + Ĥ'²)(1 + t²)^σ dt that must be
/// finite (for some σ > 5/2) for H to be admissible in the trace formula.
double admissibility_norm(const TestFunction& h, double sigma, double window);

struct AdmissibilityCheck {
  double sigma = 0.0;
  double window = 0.0;
  double norm = 0.0;             ///< norm over [-W, W]
  double norm_double = 0.0;      ///< norm over [-2W, 2W]
  double relative_growth = 0.0;  ///< norm_double / norm - 1
  /// Ratio of the tail masses over [W, 2W] and [W/2, W]; about 2^{p+1} for an
  /// integrand decaying like t^p, so a ratio >= 1 means the integral diverges.
  double tail_ratio = 0.0;
  bool converged = false;
};

/// Compares windows W and 2W. Converged when the relative growth is below
/// 1e-3 and the tail decays faster than 1/t.
AdmissibilityCheck check_admissibility(const TestFunction& h, double sigma, double window = 1000.0);

}  // namespace coexact
