// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wavepackets.hpp
 * @brief Gaussian wavepackets, coupling profiles, and field scenarios.
 */

#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "eprbkit/analyzers.hpp"
#include "eprbkit/errors.hpp"

namespace eprbkit::field {

/**
 * Gaussian packet
 *   psi_g(x) = (alpha/pi)^(3/4) exp(-alpha |x - center|^2 / 2
 *                                   + i mass velocity.(x - center)),
 * of width 1/sqrt(alpha) at the initial time, unit L2 norm.
 */
struct Wavepacket {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  double width_param = 1.0;  // alpha, 1/length^2
  double mass = 1.0;

  void validate() const {
    if (!(width_param > 0.0)) throw DomainError("Wavepacket: width parameter must be > 0");
    if (!(mass > 0.0)) throw DomainError("Wavepacket: mass must be > 0");
  }
};

/**
 * Scalar time profile with derivatives. The derivative callables may be
 * omitted; consumers needing them (steepest descent validity) fall back to
 * central finite differences.
 */
struct TimeProfile {
  std::function<double(double)> value;
  std::function<double(double)> dot;
  std::function<double(double)> ddot;

  double operator()(double t) const { return value(t); }
  double derivative(double t) const;
  double second_derivative(double t) const;

  static TimeProfile constant(double kappa);
  /// kappa0 * exp(rate * (t - t_ref))
  static TimeProfile exponential(double kappa0, double rate, double t_ref = 0.0);
  /// kappa0 * exp(-(t - t_center)^2 / (2 t_width^2))
  static TimeProfile gaussian_pulse(double kappa0, double t_center, double t_width);
};

/// kappa(x,t) = strength * delta^3(x - location) * delta(t - time).
struct PointImpulse {
  double strength = 1.0;
  Eigen::Vector3d location = Eigen::Vector3d::Zero();
  double time = 0.0;
};

/// kappa(x,t) = profile(t), no position dependence.
struct UniformInSpace {
  TimeProfile profile;
};

/**
 * kappa(x,t) = (spatial samples)(x) * time_factor(t). Samples live on a
 * uniform grid treated as a midpoint quadrature with weight spacing^3;
 * index layout is x-major: index = (ix*ny + iy)*nz + iz.
 */
struct SampledGrid {
  Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  double spacing = 1.0;
  std::array<int, 3> shape = {1, 1, 1};
  std::vector<double> values;
  TimeProfile time_factor = TimeProfile::constant(1.0);

  std::size_t flat(int ix, int iy, int iz) const {
    return static_cast<std::size_t>((ix * shape[1] + iy) * shape[2] + iz);
  }
  Eigen::Vector3d point(int ix, int iy, int iz) const {
    return origin + spacing * Eigen::Vector3d(ix, iy, iz);
  }
  void validate() const {
    if (!(spacing > 0.0)) throw DomainError("SampledGrid: spacing must be > 0");
    const auto expected = static_cast<std::size_t>(shape[0]) * shape[1] * shape[2];
    if (shape[0] < 1 || shape[1] < 1 || shape[2] < 1 || values.size() != expected) {
      throw DomainError("SampledGrid: sample count does not match grid shape");
    }
  }
};

using CouplingProfile = std::variant<PointImpulse, UniformInSpace, SampledGrid>;

/// Initial state, coupling and window of one field-theory computation:
/// packet1 carries species 1 spin up, packet2 species 2 spin down.
struct FieldScenario {
  Wavepacket packet1;
  Wavepacket packet2;
  CouplingProfile coupling = UniformInSpace{TimeProfile::constant(1.0)};
  double epsilon = 0.0;
  double t0 = 0.0;
  double t = 1.0;
  model::AnalyzerPair analyzers{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}};

  void validate() const {
    packet1.validate();
    packet2.validate();
    if (t < t0) throw DomainError("FieldScenario: t must be >= t0");
    if (epsilon < 0.0) throw DomainError("FieldScenario: epsilon must be >= 0");
  }
};

}  // namespace eprbkit::field
