// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace eprbkit::quad {

namespace {

Rule compute_rule(int n) {
  if (n < 2) throw DomainError("gauss_legendre: order must be >= 2");
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gauss_legendre_panel(const std::function<double(double)>& f, double a, double b,
                            int n) {
  const Rule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

namespace {

struct PanelOutcome {
  double value;
  double error;
  bool converged;
};

PanelOutcome refine(const std::function<double(double)>& f, double a, double b,
                    double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_legendre_panel(f, a, mid);
  const double right = gauss_legendre_panel(f, mid, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= tol) {
    return {left + right, diff, true};
  }
  if (depth <= 0) {
    return {left + right, diff, false};
  }
  const auto l = refine(f, a, mid, left, 0.5 * tol, depth - 1);
  const auto r = refine(f, mid, b, right, 0.5 * tol, depth - 1);
  return {l.value + r.value, l.error + r.error, l.converged && r.converged};
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return {0.0, 0.0};
  const double whole = gauss_legendre_panel(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::abs(whole));
  const auto out = refine(f, a, b, whole, tol, max_depth);
  if (!out.converged) {
    throw AccuracyError("integrate_adaptive: tolerance not reached at maximum depth",
                        out.value, out.error);
  }
  return {out.value, out.error};
}

}  // namespace eprbkit::quad
