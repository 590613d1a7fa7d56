// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quadrature.hpp
 * @brief Gauss-Legendre rules and adaptive panel integration.
 */

#pragma once

#include <functional>
#include <vector>

#include "eprbkit/errors.hpp"

namespace eprbkit::quad {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computed once per order and cached.
const Rule& gauss_legendre(int n);

/// Fixed n-point Gauss-Legendre estimate of the integral over [a, b].
double gauss_legendre_panel(const std::function<double(double)>& f, double a, double b,
                            int n = 15);

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/**
 * Adaptive Gauss-Legendre integration by panel bisection.
 *
 * A panel is accepted when the 15-point estimate of the panel agrees with
 * the sum of its two half-panel estimates within the locally-apportioned
 * tolerance. Throws AccuracyError (carrying the best estimate and its
 * error bound) when the recursion depth is exhausted before convergence.
 */
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol = 1e-10, double rel_tol = 1e-10,
                                  int max_depth = 40);

}  // namespace eprbkit::quad
