// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/analyzers.hpp"

#include <cmath>
#include <numbers>

namespace eprbkit::model {

void require_unit(const AnalyzerPair& a) {
  if (std::abs(a.n1.norm() - 1.0) > 1e-12 || std::abs(a.n2.norm() - 1.0) > 1e-12) {
    throw DomainError("AnalyzerPair: analyzers must be unit vectors");
  }
}

Eigen::Vector3d fibonacci_sphere_point(std::size_t k, std::size_t n) {
  // Golden-angle spiral; z runs from near +1 to near -1.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * double(k) + 1.0) / double(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * double(k);
  return {r * std::cos(phi), r * std::sin(phi), z};
}

std::vector<AnalyzerPair> analyzer_grid(std::size_t count) {
  std::vector<AnalyzerPair> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    AnalyzerPair pair{fibonacci_sphere_point(k, count),
                      fibonacci_sphere_point((k + count / 2) % count, count)};
    pair.n1.normalize();
    pair.n2.normalize();
    out.push_back(pair);
  }
  return out;
}

Eigen::Vector3d random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = {gauss(rng), gauss(rng), gauss(rng)};
  } while (v.norm() < 1e-8);
  return v.normalized();
}

std::vector<AnalyzerPair> random_analyzers(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<AnalyzerPair> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back({random_unit_vector(rng), random_unit_vector(rng)});
  }
  return out;
}

}  // namespace eprbkit::model
