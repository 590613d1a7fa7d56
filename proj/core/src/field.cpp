// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/field.hpp"

#include <cmath>
#include <numbers>

namespace eprbkit::field {

namespace {

constexpr double kPi = std::numbers::pi;

double finite_difference_step(double t) { return 1e-5 * std::max(1.0, std::abs(t)); }

void require_equal_masses(const FieldScenario& s, const char* what) {
  if (std::abs(s.packet1.mass - s.packet2.mass) >
      1e-12 * std::max(s.packet1.mass, s.packet2.mass)) {
    throw DomainError(std::string(what) + ": packets must have equal mass");
  }
}

/// Gaussian-density overlap integral over all space:
/// Int exp(-a1 |x-c1|^2 - a2 |x-c2|^2) d3x
///   = (pi/(a1+a2))^(3/2) exp(-(a1 a2/(a1+a2)) |c1-c2|^2).
double gaussian_overlap(double a1, const Eigen::Vector3d& c1, double a2,
                        const Eigen::Vector3d& c2) {
  const double asum = a1 + a2;
  return std::pow(kPi / asum, 1.5) * std::exp(-(a1 * a2 / asum) * (c1 - c2).squaredNorm());
}

/// Product of the two propagated packet densities at (x, t'' - t0),
/// evaluated from the amplitudes (no Gaussian closed form).
double density_product(const FieldScenario& s, const Eigen::Vector3d& x, double dt) {
  const cxd a1 = propagate_gaussian(s.packet1, x, dt);
  const cxd a2 = propagate_gaussian(s.packet2, x, dt);
  return std::norm(a1) * std::norm(a2);
}

/// Spatial integral Int |psi1|^2 |psi2|^2 d3x at elapsed time dt, by
/// per-axis Gauss-Legendre panels over the union support truncated at
/// eight standard deviations. Valid because each packet density is a
/// product over Cartesian axes.
double density_overlap_quadrature(const FieldScenario& s, double dt) {
  const double sigma1 = 1.0 / std::sqrt(width_param_at(s.packet1, dt));
  const double sigma2 = 1.0 / std::sqrt(width_param_at(s.packet2, dt));
  const Eigen::Vector3d c1 = center_at(s.packet1, dt);
  const Eigen::Vector3d c2 = center_at(s.packet2, dt);
  const double pad = 8.0 * std::max(sigma1, sigma2);

  double result = 1.0;
  for (int axis = 0; axis < 3; ++axis) {
    const double lo = std::min(c1[axis], c2[axis]) - pad;
    const double hi = std::max(c1[axis], c2[axis]) + pad;
    const auto f = [&](double x) {
      const cxd f1 = propagate_gaussian_axis(s.packet1.width_param, s.packet1.mass,
                                             s.packet1.center[axis], s.packet1.velocity[axis],
                                             x, dt);
      const cxd f2 = propagate_gaussian_axis(s.packet2.width_param, s.packet2.mass,
                                             s.packet2.center[axis], s.packet2.velocity[axis],
                                             x, dt);
      return std::norm(f1) * std::norm(f2);
    };
    result *= quad::gauss_legendre_panel(f, lo, hi, 96);
  }
  return result;
}

}  // namespace

double TimeProfile::derivative(double t) const {
  if (dot) return dot(t);
  const double h = finite_difference_step(t);
  return (value(t + h) - value(t - h)) / (2.0 * h);
}

double TimeProfile::second_derivative(double t) const {
  if (ddot) return ddot(t);
  const double h = finite_difference_step(t);
  return (value(t + h) - 2.0 * value(t) + value(t - h)) / (h * h);
}

TimeProfile TimeProfile::constant(double kappa) {
  return {[kappa](double) { return kappa; }, [](double) { return 0.0; },
          [](double) { return 0.0; }};
}

TimeProfile TimeProfile::exponential(double kappa0, double rate, double t_ref) {
  return {[=](double t) { return kappa0 * std::exp(rate * (t - t_ref)); },
          [=](double t) { return rate * kappa0 * std::exp(rate * (t - t_ref)); },
          [=](double t) { return rate * rate * kappa0 * std::exp(rate * (t - t_ref)); }};
}

TimeProfile TimeProfile::gaussian_pulse(double kappa0, double t_center, double t_width) {
  if (!(t_width > 0.0)) throw DomainError("TimeProfile: pulse width must be > 0");
  const double inv2 = 1.0 / (t_width * t_width);
  auto val = [=](double t) {
    const double u = t - t_center;
    return kappa0 * std::exp(-0.5 * u * u * inv2);
  };
  return {val, [=](double t) { return -(t - t_center) * inv2 * val(t); },
          [=](double t) {
            const double u = t - t_center;
            return (u * u * inv2 - 1.0) * inv2 * val(t);
          }};
}

cxd greens_function(const Eigen::Vector3d& dx, double dt, double m) {
  if (dt == 0.0) {
    throw DomainError(
        "greens_function: dt = 0 is the delta-function limit and cannot be evaluated");
  }
  const cxd base = cxd(0.0, -2.0 * m) / (4.0 * kPi * dt);
  return std::pow(base, 1.5) * std::exp(cxd(0.0, m * dx.squaredNorm() / (2.0 * dt)));
}

double width_param_at(const Wavepacket& wp, double t_elapsed) {
  const double r = wp.width_param * t_elapsed / wp.mass;
  return wp.width_param / (1.0 + r * r);
}

Eigen::Vector3d center_at(const Wavepacket& wp, double t_elapsed) {
  return wp.center + wp.velocity * t_elapsed;
}

cxd propagate_gaussian_axis(double alpha, double mass, double x0, double v, double x,
                            double t_elapsed) {
  const cxd denom(1.0, alpha * t_elapsed / mass);
  const double dx = x - x0;
  const cxd exponent =
      (cxd(-0.5 * alpha * dx * dx, mass * v * dx - 0.5 * mass * v * v * t_elapsed)) / denom;
  return std::pow(alpha / kPi, 0.25) * std::pow(denom, -0.5) * std::exp(exponent);
}

cxd propagate_gaussian(const Wavepacket& wp, const Eigen::Vector3d& x, double t_elapsed) {
  wp.validate();
  if (t_elapsed < 0.0) throw DomainError("propagate_gaussian: elapsed time must be >= 0");
  cxd out(1.0, 0.0);
  for (int axis = 0; axis < 3; ++axis) {
    out *= propagate_gaussian_axis(wp.width_param, wp.mass, wp.center[axis],
                                   wp.velocity[axis], x[axis], t_elapsed);
  }
  return out;
}

double entanglement_L_quadrature(const FieldScenario& s) {
  s.validate();
  if (std::holds_alternative<PointImpulse>(s.coupling)) {
    throw DomainError(
        "entanglement_L_quadrature: point impulses are handled analytically, use "
        "entanglement_L_point");
  }
  const auto integrand = [&](double tpp) {
    const double dt = tpp - s.t0;
    if (const auto* uniform = std::get_if<UniformInSpace>(&s.coupling)) {
      return 2.0 * uniform->profile(tpp) * density_overlap_quadrature(s, dt);
    }
    const auto& grid = std::get<SampledGrid>(s.coupling);
    double sum = 0.0;
    for (int ix = 0; ix < grid.shape[0]; ++ix)
      for (int iy = 0; iy < grid.shape[1]; ++iy)
        for (int iz = 0; iz < grid.shape[2]; ++iz) {
          const double kappa = grid.values[grid.flat(ix, iy, iz)];
          if (kappa == 0.0) continue;
          sum += kappa * density_product(s, grid.point(ix, iy, iz), dt);
        }
    const double h3 = grid.spacing * grid.spacing * grid.spacing;
    return 2.0 * grid.time_factor(tpp) * h3 * sum;
  };
  if (const auto* grid = std::get_if<SampledGrid>(&s.coupling)) grid->validate();
  return quad::integrate_adaptive(integrand, s.t0, s.t, 1e-14, 1e-7, 36).value;
}

double entanglement_L_gaussian(const FieldScenario& s) {
  s.validate();
  require_equal_masses(s, "entanglement_L_gaussian");
  if (std::holds_alternative<PointImpulse>(s.coupling)) {
    throw DomainError(
        "entanglement_L_gaussian: point impulses are handled analytically, use "
        "entanglement_L_point");
  }
  const auto integrand = [&](double tpp) {
    const double dt = tpp - s.t0;
    const double a1 = width_param_at(s.packet1, dt);
    const double a2 = width_param_at(s.packet2, dt);
    const Eigen::Vector3d c1 = center_at(s.packet1, dt);
    const Eigen::Vector3d c2 = center_at(s.packet2, dt);
    const double densities_prefactor = std::pow(a1 * a2 / (kPi * kPi), 1.5);
    if (const auto* uniform = std::get_if<UniformInSpace>(&s.coupling)) {
      // Analytic spatial integral; for equal widths this is the
      // (1/sqrt(2)) (A/pi)^(3/2) exp(-(A/2)|c1-c2|^2) reduction.
      return 2.0 * uniform->profile(tpp) * densities_prefactor *
             gaussian_overlap(a1, c1, a2, c2);
    }
    const auto& grid = std::get<SampledGrid>(s.coupling);
    double sum = 0.0;
    for (int ix = 0; ix < grid.shape[0]; ++ix)
      for (int iy = 0; iy < grid.shape[1]; ++iy)
        for (int iz = 0; iz < grid.shape[2]; ++iz) {
          const double kappa = grid.values[grid.flat(ix, iy, iz)];
          if (kappa == 0.0) continue;
          const Eigen::Vector3d x = grid.point(ix, iy, iz);
          sum += kappa * std::exp(-a1 * (x - c1).squaredNorm() - a2 * (x - c2).squaredNorm());
        }
    const double h3 = grid.spacing * grid.spacing * grid.spacing;
    return 2.0 * grid.time_factor(tpp) * h3 * densities_prefactor * sum;
  };
  if (const auto* grid = std::get_if<SampledGrid>(&s.coupling)) grid->validate();
  return quad::integrate_adaptive(integrand, s.t0, s.t, 1e-14, 1e-8, 36).value;
}

PointInteractionResult entanglement_L_point(const FieldScenario& s) {
  s.validate();
  const auto* impulse = std::get_if<PointImpulse>(&s.coupling);
  if (!impulse) {
    throw DomainError("entanglement_L_point: scenario coupling is not a point impulse");
  }
  if (impulse->time < s.t0 || impulse->time > s.t) {
    return {0.0, false};
  }
  const double dt = impulse->time - s.t0;
  const double a1 = width_param_at(s.packet1, dt);
  const double a2 = width_param_at(s.packet2, dt);
  const double d1 = (impulse->location - center_at(s.packet1, dt)).squaredNorm();
  const double d2 = (impulse->location - center_at(s.packet2, dt)).squaredNorm();
  const double value = 2.0 * impulse->strength * std::pow(a1 * a2 / (kPi * kPi), 1.5) *
                       std::exp(-a1 * d1 - a2 * d2);
  return {value, true};
}

SteepestDescentResult steepest_descent_L(const FieldScenario& s) {
  s.validate();
  const auto* uniform = std::get_if<UniformInSpace>(&s.coupling);
  if (!uniform) {
    throw DomainError("steepest_descent_L: requires a space-uniform coupling");
  }
  require_equal_masses(s, "steepest_descent_L");
  const double alpha = s.packet1.width_param;
  if (std::abs(alpha - s.packet2.width_param) > 1e-12 * alpha) {
    throw DomainError("steepest_descent_L: packets must share one width parameter");
  }
  const Eigen::Vector3d dv = s.packet1.velocity - s.packet2.velocity;
  const Eigen::Vector3d dx = s.packet1.center - s.packet2.center;
  const double dv2 = dv.squaredNorm();
  if (dv2 == 0.0) {
    throw DomainError(
        "steepest_descent_L: degenerate kinematics, equal velocities leave the saddle "
        "undefined");
  }

  SteepestDescentResult out;
  out.t_min = s.t0 - dv.dot(dx) / dv2;
  out.d_min = (dx - (dv.dot(dx) / dv2) * dv).norm();

  const double kappa = uniform->profile(out.t_min);
  const double kdot = uniform->profile.derivative(out.t_min);
  const double kddot = uniform->profile.second_derivative(out.t_min);
  // One evaluation of the implicit stationary-point formula at t_min.
  out.t_c = s.t0 + (kappa != 0.0 ? (kdot / kappa) / (alpha * dv2) : 0.0) - dv.dot(dx) / dv2;

  const double denom_dot = std::abs(alpha * dv.dot(dx));
  const double num_dot = kappa != 0.0 ? std::abs(kdot / kappa) : 0.0;
  out.validity.kappa_dot_ratio =
      num_dot == 0.0 ? 0.0
                     : (denom_dot == 0.0 ? std::numeric_limits<double>::infinity()
                                         : num_dot / denom_dot);
  out.validity.kappa_ddot_ratio =
      kappa != 0.0 ? std::abs(kddot / kappa) / (alpha * dv2)
                   : std::numeric_limits<double>::infinity();
  out.validity.saddle_inside_window = out.t_min >= s.t0 && out.t_min <= s.t;

  out.L_approx = (alpha * kappa / kPi) / std::sqrt(dv2) * std::exp(-0.5 * alpha * out.d_min * out.d_min);
  return out;
}

double correlation_field(const FieldScenario& s, double L) {
  const double z = s.analyzers.n1.z() * s.analyzers.n2.z();
  const double dot = s.analyzers.n1.dot(s.analyzers.n2);
  const double eps_l = s.epsilon * L;
  return -(1.0 - eps_l) * z - eps_l * dot;
}

}  // namespace eprbkit::field
