// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file field.hpp
 * @brief First-order field-theory spin correlation: free propagation,
 *        the entanglement integral L(t) by several routes, and the
 *        steepest-descent approximation.
 *
 * The first-order correlation is
 *
 *   C(t) = -(1 - eps L(t)) n1z n2z - eps L(t) n1.n2,
 *
 * where L(t) = 2 Int dt'' Int d3x kappa(x,t'') |psi1(x,t'')|^2 |psi2(x,t'')|^2
 * is the coupling-weighted overlap of the two freely-propagated packet
 * densities. Routes provided:
 *
 *  - entanglement_L_quadrature: numeric spatial and temporal integration of
 *    the propagated densities (the cross-check oracle; never forms the
 *    Gaussian closed form),
 *  - entanglement_L_gaussian: Gaussian closed form in space, numeric in time,
 *  - entanglement_L_point: fully closed form for a point impulse,
 *  - steepest_descent_L: saddle-point approximation for space-uniform
 *    coupling, with validity diagnostics.
 */

#pragma once

#include <complex>

#include "eprbkit/quadrature.hpp"
#include "eprbkit/wavepackets.hpp"

namespace eprbkit::field {

using cxd = std::complex<double>;

/**
 * Free Schroedinger propagator
 *   G(dx, dt) = (-2 m i / (4 pi dt))^(3/2) exp(i m |dx|^2 / (2 dt)),
 * principal branch of the 3/2 power. dt = 0 is the delta-function limit
 * and throws DomainError.
 */
cxd greens_function(const Eigen::Vector3d& dx, double dt, double m);

/// Packet width parameter after free spreading, A(t) = alpha / (1 + alpha^2 t^2 / m^2).
double width_param_at(const Wavepacket& wp, double t_elapsed);

/// Packet center trajectory c(t) = center + velocity * t.
Eigen::Vector3d center_at(const Wavepacket& wp, double t_elapsed);

/**
 * One Cartesian factor of the freely-propagated Gaussian:
 *   (alpha/pi)^(1/4) (1 + i alpha t / m)^(-1/2)
 *     exp[(-(alpha/2) X^2 + i m v X - i m v^2 t / 2) / (1 + i alpha t / m)],
 * with X = x - x0. The 3-D amplitude is the product of its three factors.
 */
cxd propagate_gaussian_axis(double alpha, double mass, double x0, double v, double x,
                            double t_elapsed);

/// Freely-propagated packet amplitude Int psi_g(x') G(x'-x, t) d3x' in closed
/// form; |result|^2 is the Gaussian density (A/pi)^(3/2) exp(-A |x - c(t)|^2).
cxd propagate_gaussian(const Wavepacket& wp, const Eigen::Vector3d& x, double t_elapsed);

/**
 * L(t) by numeric quadrature of the propagated densities. Requires a
 * UniformInSpace or SampledGrid coupling (point impulses have the closed
 * form below). Spatial integrals use Gauss-Legendre panels truncated at
 * eight standard deviations; the time integral is adaptive. Throws
 * AccuracyError if the time quadrature cannot converge.
 */
double entanglement_L_quadrature(const FieldScenario& scenario);

/// L(t) with the spatial integral done analytically against the Gaussian
/// densities (UniformInSpace) or summed over the coupling grid
/// (SampledGrid); time integral adaptive. Requires equal packet masses.
double entanglement_L_gaussian(const FieldScenario& scenario);

struct PointInteractionResult {
  double value = 0.0;
  bool inside_window = true;  // false: impulse time outside [t0, t], value 0
};

/// Closed-form L for a PointImpulse coupling,
///   2 kappa (A(tI)/pi)^3 exp(-A(tI)[|xI - c1(tI)|^2 + |xI - c2(tI)|^2]).
PointInteractionResult entanglement_L_point(const FieldScenario& scenario);

/// Both smoothness ratios must stay below this for the saddle-point
/// approximation to be trusted (and for the acceptance checks).
inline constexpr double kSteepestDescentValidityThreshold = 0.05;

struct SteepestDescentValidity {
  /// |kappa_dot/kappa| / |alpha (v1-v2).(x1-x2)| at the saddle.
  double kappa_dot_ratio = 0.0;
  /// |kappa_ddot/kappa| / (alpha |v1-v2|^2) at the saddle.
  double kappa_ddot_ratio = 0.0;
  bool saddle_inside_window = true;

  bool ok() const {
    return kappa_dot_ratio <= kSteepestDescentValidityThreshold &&
           kappa_ddot_ratio <= kSteepestDescentValidityThreshold;
  }
};

struct SteepestDescentResult {
  double L_approx = 0.0;
  double t_c = 0.0;    ///< stationary point (implicit formula evaluated at t_min)
  double t_min = 0.0;  ///< time of minimum center separation
  double d_min = 0.0;  ///< minimum center separation
  SteepestDescentValidity validity;
};

/**
 * Saddle-point approximation of L for space-uniform coupling,
 *   L ~= (alpha kappa(t_min) / pi) / |v1 - v2| * exp(-(alpha/2) d_min^2).
 * Requires matched packets (equal alpha and mass) and |v1 - v2| > 0;
 * throws DomainError for degenerate kinematics.
 */
SteepestDescentResult steepest_descent_L(const FieldScenario& scenario);

/// C(t) = -(1 - eps L) n1z n2z - eps L n1.n2 for the scenario's analyzers.
double correlation_field(const FieldScenario& scenario, double L);

/// eps*L outside [0, 1] leaves the correlation formula outside its
/// first-order interpretation; callers may warn.
inline bool correlation_field_interpretable(double eps_times_L) {
  return eps_times_L >= 0.0 && eps_times_L <= 1.0;
}

}  // namespace eprbkit::field
