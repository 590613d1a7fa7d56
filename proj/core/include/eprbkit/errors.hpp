// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eprbkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: mode outside the mode set, shape mismatch, non-unit
/// analyzer vector, non-hermitian generator, and similar contract breaches.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested occupation sector cannot be populated (e.g. more particles
/// than modes).
class EmptySectorError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Least-squares fit cannot be performed (too few samples or a
/// rank-deficient design).
class EstimationError : public Error {
 public:
  using Error::Error;
};

/// Quadrature failed to reach the requested tolerance. Carries the best
/// available estimate and its error bound.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_bound)
      : Error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Problem size exceeds the exact-evolution budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace eprbkit
