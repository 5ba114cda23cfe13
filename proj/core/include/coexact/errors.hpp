// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace coexact {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input document. Messages carry the JSON field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A numerical step failed (singular Gram matrix, non-finite value, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : NumericalError(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Cholesky factorization broke down at `pivot_index`.
class CholeskyError : public NumericalError {
 public:
  CholeskyError(const std::string& what, int pivot_index)
      : NumericalError(what), pivot_index_(pivot_index) {}

  int pivot_index() const noexcept { return pivot_index_; }

 private:
  int pivot_index_;
};

/// Parameters violate a documented constraint (support, family size, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A test function reaches beyond the enumerated length spectrum.
class SupportError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace coexact
