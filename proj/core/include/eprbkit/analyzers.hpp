// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file analyzers.hpp
 * @brief Analyzer directions, correlation samples, and unit-vector sampling.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "eprbkit/errors.hpp"

namespace eprbkit::model {

/// Analyzer directions n1 (species 1) and n2 (species 2); unit 3-vectors.
struct AnalyzerPair {
  Eigen::Vector3d n1;
  Eigen::Vector3d n2;
};

/// Throws DomainError unless both analyzers are unit vectors within 1e-12.
void require_unit(const AnalyzerPair& a);

/// One measured (or synthesized) spin-correlation data point.
struct CorrelationSample {
  AnalyzerPair analyzers;
  double value = 0.0;
};

/// k-th point of the n-point Fibonacci sphere covering.
Eigen::Vector3d fibonacci_sphere_point(std::size_t k, std::size_t n);

/// Deterministic low-discrepancy analyzer pairs (n1 from the Fibonacci
/// covering, n2 from the covering rotated by half a step).
std::vector<AnalyzerPair> analyzer_grid(std::size_t count);

/// Isotropic unit vector from three normal deviates.
Eigen::Vector3d random_unit_vector(std::mt19937_64& rng);

/// Seeded random analyzer pairs, reproducible across runs.
std::vector<AnalyzerPair> random_analyzers(std::size_t count, std::uint64_t seed);

}  // namespace eprbkit::model
