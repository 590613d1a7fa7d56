// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eprbkit/field.hpp"
#include "eprbkit/quadrature.hpp"

using namespace eprbkit;
using field::cxd;
using field::FieldScenario;
using field::TimeProfile;
using field::Wavepacket;

namespace {

constexpr double kPi = std::numbers::pi;

/// One Cartesian factor of the free propagator.
cxd greens_axis(double dx, double dt, double m) {
  const cxd base = cxd(0.0, -2.0 * m) / (4.0 * kPi * dt);
  return std::pow(base, 0.5) * std::exp(cxd(0.0, m * dx * dx / (2.0 * dt)));
}

/// Direct numeric evaluation of the bracket integral
/// Int psi_axis(x') G_axis(x - x', dt) dx' on a wide fixed panel.
cxd bracket_numeric(double alpha, double m, double x0, double v, double x, double dt) {
  const double sigma = 1.0 / std::sqrt(alpha);
  const double lo = x0 - 10.0 * sigma;
  const double hi = x0 + 10.0 * sigma;
  const auto integrand = [&](double xp) {
    const cxd packet = std::pow(alpha / kPi, 0.25) *
                       std::exp(cxd(-0.5 * alpha * (xp - x0) * (xp - x0),
                                    m * v * (xp - x0)));
    return packet * greens_axis(x - xp, dt, m);
  };
  const auto real_part = [&](double xp) { return integrand(xp).real(); };
  const auto imag_part = [&](double xp) { return integrand(xp).imag(); };
  // The phase of G varies quickly; many nodes keep the panel exact.
  return {quad::gauss_legendre_panel(real_part, lo, hi, 480),
          quad::gauss_legendre_panel(imag_part, lo, hi, 480)};
}

FieldScenario head_on_scenario() {
  FieldScenario s;
  s.packet1 = {{-1.0, 0.0, 0.0}, {0.5, 0.0, 0.0}, 4.0, 40.0};
  s.packet2 = {{1.0, 0.0, 0.0}, {-0.5, 0.0, 0.0}, 4.0, 40.0};
  s.coupling = field::UniformInSpace{TimeProfile::constant(0.3)};
  s.epsilon = 0.05;
  s.t0 = 0.0;
  s.t = 4.0;
  return s;
}

}  // namespace

TEST_CASE("greens function symmetries and reference value") {
  const Eigen::Vector3d dx{0.3, -0.7, 1.1};
  const double dt = 0.8, m = 2.5;

  CHECK(std::abs(field::greens_function(-dx, dt, m) - field::greens_function(dx, dt, m)) <
        1e-15);
  CHECK(std::abs(field::greens_function(dx, -dt, m) -
                 std::conj(field::greens_function(dx, dt, m))) < 1e-15);

  // m = 1, dt = 1, dx = 0: the principal branch of (-i/(2 pi))^(3/2).
  const cxd expected = std::pow(cxd(0.0, -1.0) / (2.0 * kPi), 1.5);
  CHECK(std::abs(field::greens_function(Eigen::Vector3d::Zero(), 1.0, 1.0) - expected) <
        1e-15);

  CHECK_THROWS_AS((void)field::greens_function(dx, 0.0, m), DomainError);
}

TEST_CASE("free propagation composes: two-step packet evolution equals one step") {
  // The group property Int G G* = G shows up at packet level as
  // propagate(t1+t2) == propagate over t1 then t2. The second leg uses the
  // bracket integral directly, with the already-propagated amplitude as
  // the integrand weight.
  const double alpha = 3.0, m = 1.6, x0 = -0.2, v = 0.45;
  const double t1 = 0.35, t2 = 0.55;
  for (const double x : {-0.4, 0.3, 1.0}) {
    const auto leg = [&](double xp) {
      return field::propagate_gaussian_axis(alpha, m, x0, v, xp, t1) *
             greens_axis(x - xp, t2, m);
    };
    const auto re = [&](double xp) { return leg(xp).real(); };
    const auto im = [&](double xp) { return leg(xp).imag(); };
    const double a1 = alpha / (1.0 + alpha * alpha * t1 * t1 / (m * m));
    const double sigma = 1.0 / std::sqrt(a1);
    const double c = x0 + v * t1;
    const cxd two_step{quad::gauss_legendre_panel(re, c - 12.0 * sigma, c + 12.0 * sigma, 480),
                       quad::gauss_legendre_panel(im, c - 12.0 * sigma, c + 12.0 * sigma, 480)};
    const cxd one_step = field::propagate_gaussian_axis(alpha, m, x0, v, x, t1 + t2);
    CHECK(std::abs(two_step - one_step) < 1e-6);
  }
}

TEST_CASE("propagated gaussian: initial value, bracket validation, peak density") {
  const Wavepacket wp{{0.4, -0.3, 0.2}, {0.6, -0.1, 0.25}, 3.0, 2.0};

  // t = 0 reproduces psi_g.
  for (const auto& x : {Eigen::Vector3d{0.0, 0.0, 0.0}, Eigen::Vector3d{0.7, -0.5, 0.3}}) {
    const Eigen::Vector3d d = x - wp.center;
    const cxd psi_g = std::pow(wp.width_param / kPi, 0.75) *
                      std::exp(cxd(-0.5 * wp.width_param * d.squaredNorm(),
                                   wp.mass * wp.velocity.dot(d)));
    CHECK(std::abs(field::propagate_gaussian(wp, x, 0.0) - psi_g) < 1e-13);
  }

  // The closed form equals the direct bracket integral within 1e-6
  // (validates replacing each bracket of L(t) by a propagated packet).
  for (const double dt : {0.3, 0.9}) {
    for (const double x : {0.1, 0.8, 1.6}) {
      const cxd numeric = bracket_numeric(wp.width_param, wp.mass, wp.center.x(),
                                          wp.velocity.x(), x, dt);
      const cxd closed = field::propagate_gaussian_axis(wp.width_param, wp.mass,
                                                        wp.center.x(), wp.velocity.x(), x, dt);
      CHECK(std::abs(numeric - closed) < 1e-6);
    }
  }

  // Norm conservation by quadrature, and the peak density value.
  for (const double dt : {0.0, 0.5, 2.0}) {
    const double a_t = field::width_param_at(wp, dt);
    double norm = 1.0;
    for (int axis = 0; axis < 3; ++axis) {
      const double c = field::center_at(wp, dt)[axis];
      const double sigma = 1.0 / std::sqrt(a_t);
      const auto density = [&](double x) {
        return std::norm(field::propagate_gaussian_axis(
            wp.width_param, wp.mass, wp.center[axis], wp.velocity[axis], x, dt));
      };
      norm *= quad::integrate_adaptive(density, c - 10.0 * sigma, c + 10.0 * sigma, 1e-10,
                                       1e-10)
                  .value;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));

    const double peak =
        std::norm(field::propagate_gaussian(wp, field::center_at(wp, dt), dt));
    CHECK(peak == doctest::Approx(std::pow(a_t / kPi, 1.5)).epsilon(1e-9));
  }

  CHECK_THROWS_AS((void)field::propagate_gaussian(wp, Eigen::Vector3d::Zero(), -0.1),
                  DomainError);
}

TEST_CASE("entanglement integral: gaussian closed form vs quadrature") {
  FieldScenario s = head_on_scenario();
  const double via_quad = field::entanglement_L_quadrature(s);
  const double via_gauss = field::entanglement_L_gaussian(s);
  CHECK(via_quad > 0.0);
  CHECK(std::abs(via_gauss - via_quad) <= 1e-4 * std::abs(via_quad));

  // kappa = 0 gives exactly zero.
  s.coupling = field::UniformInSpace{TimeProfile::constant(0.0)};
  CHECK(field::entanglement_L_quadrature(s) == 0.0);
  CHECK(field::entanglement_L_gaussian(s) == 0.0);

  // Packets whose minimum separation vastly exceeds the width produce an
  // exponentially negligible overlap.
  FieldScenario far = head_on_scenario();
  far.packet1.center = {-1.0, 40.0, 0.0};  // d_min = 40 >> 1/sqrt(alpha) = 0.5
  far.packet2.center = {1.0, 0.0, 0.0};
  const double kappa_window = 0.3 * (far.t - far.t0);
  CHECK(field::entanglement_L_gaussian(far) < 1e-8 * kappa_window);
  CHECK(field::entanglement_L_quadrature(far) < 1e-8 * kappa_window);

  FieldScenario point = head_on_scenario();
  point.coupling = field::PointImpulse{1.0, {0.0, 0.0, 0.0}, 2.0};
  CHECK_THROWS_AS((void)field::entanglement_L_quadrature(point), DomainError);
  CHECK_THROWS_AS((void)field::entanglement_L_gaussian(point), DomainError);
}

TEST_CASE("uniform coupling reduces to the closed-form time integrand") {
  // Independent evaluation of (1/sqrt(2)) Int kappa (A/pi)^(3/2)
  // exp(-(A/2)|c1-c2|^2) against entanglement_L_gaussian.
  FieldScenario s = head_on_scenario();
  s.coupling = field::UniformInSpace{TimeProfile::gaussian_pulse(0.4, 2.0, 0.7)};
  const auto& profile = std::get<field::UniformInSpace>(s.coupling).profile;

  const auto integrand = [&](double tpp) {
    const double dt = tpp - s.t0;
    const double a_t = field::width_param_at(s.packet1, dt);
    const double sep2 =
        (field::center_at(s.packet1, dt) - field::center_at(s.packet2, dt)).squaredNorm();
    return profile(tpp) * std::pow(a_t / kPi, 1.5) * std::exp(-0.5 * a_t * sep2) /
           std::sqrt(2.0);
  };
  const double direct = quad::integrate_adaptive(integrand, s.t0, s.t, 1e-13, 1e-11).value;
  CHECK(std::abs(field::entanglement_L_gaussian(s) - direct) <= 1e-10 * std::abs(direct));
}

TEST_CASE("sampled-grid coupling: both routes agree and translation covariance holds") {
  FieldScenario s = head_on_scenario();
  field::SampledGrid grid;
  grid.origin = {-0.6, -0.6, -0.6};
  grid.spacing = 0.15;
  grid.shape = {9, 9, 9};
  grid.values.assign(9 * 9 * 9, 0.0);
  for (int ix = 0; ix < 9; ++ix)
    for (int iy = 0; iy < 9; ++iy)
      for (int iz = 0; iz < 9; ++iz) {
        const Eigen::Vector3d p = grid.point(ix, iy, iz);
        grid.values[grid.flat(ix, iy, iz)] = std::exp(-2.0 * p.squaredNorm());
      }
  grid.time_factor = TimeProfile::constant(0.5);
  s.coupling = grid;

  const double via_gauss = field::entanglement_L_gaussian(s);
  const double via_quad = field::entanglement_L_quadrature(s);
  CHECK(via_gauss > 0.0);
  CHECK(std::abs(via_gauss - via_quad) <= 1e-4 * std::abs(via_gauss));

  //

  FieldScenario shifted = s;
  const Eigen::Vector3d shift{0.37, -0.21, 0.11};
  shifted.packet1.center += shift;
  shifted.packet2.center += shift;
  auto shifted_grid = grid;
  shifted_grid.origin += shift;
  shifted.coupling = shifted_grid;
  CHECK(std::abs(field::entanglement_L_gaussian(shifted) - via_gauss) <=
        1e-10 * std::max(1.0, std::abs(via_gauss)));

  FieldScenario uniform_shifted = head_on_scenario();
  uniform_shifted.packet1.center += shift;
  uniform_shifted.packet2.center += shift;
  CHECK(std::abs(field::entanglement_L_gaussian(uniform_shifted) -
                 field::entanglement_L_gaussian(head_on_scenario())) <= 1e-10);
}

TEST_CASE("point-impulse closed form") {
  FieldScenario s;
  s.packet1 = {{-0.8, 0.0, 0.0}, {0.4, 0.0, 0.0}, 5.0, 30.0};
  s.packet2 = {{0.8, 0.0, 0.0}, {-0.4, 0.0, 0.0}, 5.0, 30.0};
  s.t0 = 0.0;
  s.t = 4.0;
  const double t_impulse = 2.0;  // centers meet at the origin then
  const double kappa = 0.7;

  const double a_t = field::width_param_at(s.packet1, t_impulse);
  const Eigen::Vector3d meeting = field::center_at(s.packet1, t_impulse);
  CHECK((meeting - field::center_at(s.packet2, t_impulse)).norm() < 1e-12);

  s.coupling = field::PointImpulse{kappa, meeting, t_impulse};
  const auto coincident = field::entanglement_L_point(s);
  CHECK(coincident.inside_window);
  CHECK(coincident.value ==
        doctest::Approx(2.0 * kappa * std::pow(a_t / kPi, 3.0)).epsilon(1e-12));

  // Displacement by d multiplies by exp(-2 A d^2), isotropically.
  const double d = 0.31;
  for (int axis = 0; axis < 3; ++axis) {
    Eigen::Vector3d off = meeting;
    off[axis] += d;
    s.coupling = field::PointImpulse{kappa, off, t_impulse};
    const double log_ratio = std::log(field::entanglement_L_point(s).value) -
                             std::log(coincident.value);
    CHECK(std::abs(log_ratio + 2.0 * a_t * d * d) < 1e-10);
  }

  // At t_I = t0 the width parameter is exactly alpha.
  s.coupling = field::PointImpulse{kappa, s.packet1.center, s.t0};
  const double at_start = field::entanglement_L_point(s).value;
  const double expected = 2.0 * kappa * std::pow(s.packet1.width_param / kPi, 3.0) *
                          std::exp(-s.packet1.width_param *
                                   (s.packet1.center - s.packet2.center).squaredNorm());
  CHECK(at_start == doctest::Approx(expected).epsilon(1e-12));

  s.coupling = field::PointImpulse{kappa, meeting, 17.0};  // outside [t0, t]
  const auto outside = field::entanglement_L_point(s);
  CHECK_FALSE(outside.inside_window);
  CHECK(outside.value == 0.0);
}

TEST_CASE("steepest descent: kinematics, exact value at zero miss distance") {
  FieldScenario s;
  s.packet1 = {{-1.0, 0.0, 0.0}, {0.5, 0.0, 0.0}, 25.0, 5000.0};
  s.packet2 = {{1.0, 0.0, 0.0}, {-0.5, 0.0, 0.0}, 25.0, 5000.0};
  s.coupling = field::UniformInSpace{TimeProfile::constant(0.02)};
  s.t0 = 0.0;
  s.t = 4.0;

  const auto res = field::steepest_descent_L(s);
  // x1-x2 = (-2,0,0), v1-v2 = (1,0,0): minimum at t0 + 2 with d_min = 0.
  CHECK(res.t_min == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(res.t_c == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(res.d_min == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(res.validity.kappa_dot_ratio == 0.0);
  CHECK(res.validity.kappa_ddot_ratio == 0.0);
  CHECK(res.validity.ok());
  CHECK(res.validity.saddle_inside_window);

  // d_min = 0, constant kappa: L = alpha kappa / (pi |dv|).
  CHECK(res.L_approx == doctest::Approx(25.0 * 0.02 / kPi).epsilon(1e-12));

  // Against the quadrature path in the validity regime.
  const double reference = field::entanglement_L_gaussian(s);
  CHECK(std::abs(res.L_approx - reference) <= 0.05 * reference);

  // Nonzero miss distance.
  FieldScenario miss = s;
  miss.packet1.center = {-1.0, 0.1, 0.0};
  miss.packet2.center = {1.0, -0.1, 0.0};
  const auto res_miss = field::steepest_descent_L(miss);
  CHECK(res_miss.d_min == doctest::Approx(0.2).epsilon(1e-12));
  const double ref_miss = field::entanglement_L_gaussian(miss);
  CHECK(std::abs(res_miss.L_approx - ref_miss) <= 0.05 * ref_miss);

  // Slowly-varying coupling keeps the ratios small but nonzero.
  FieldScenario varying = s;
  varying.coupling = field::UniformInSpace{TimeProfile::exponential(0.02, 0.5, 2.0)};
  const auto res_var = field::steepest_descent_L(varying);
  CHECK(res_var.validity.kappa_dot_ratio > 0.0);
  CHECK(res_var.validity.ok());
  const double ref_var = field::entanglement_L_gaussian(varying);
  CHECK(std::abs(res_var.L_approx - ref_var) <= 0.05 * ref_var);

  FieldScenario degenerate = s;
  degenerate.packet2.velocity = degenerate.packet1.velocity;
  CHECK_THROWS_AS((void)field::steepest_descent_L(degenerate), DomainError);
}

TEST_CASE("first-order correlation formula") {
  FieldScenario s = head_on_scenario();
  s.analyzers = {{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}};
  s.epsilon = 1.0;

  CHECK(field::correlation_field(s, 0.0) == doctest::Approx(-1.0));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    s.analyzers = {model::random_unit_vector(rng), model::random_unit_vector(rng)};
    const double z = s.analyzers.n1.z() * s.analyzers.n2.z();
    CHECK(field::correlation_field(s, 0.0) == doctest::Approx(-z).epsilon(1e-12));
    // eps L = 1 reproduces the singlet correlation for any analyzers.
    CHECK(field::correlation_field(s, 1.0) ==
          doctest::Approx(-s.analyzers.n1.dot(s.analyzers.n2)).epsilon(1e-12));
  }

  CHECK(field::correlation_field_interpretable(0.5));
  CHECK_FALSE(field::correlation_field_interpretable(1.5));
}

TEST_CASE("positivity of L for nonnegative couplings") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    FieldScenario s;
    s.packet1 = {{uni(rng), uni(rng), uni(rng)}, {uni(rng), uni(rng), uni(rng)}, 2.0, 20.0};
    s.packet2 = {{uni(rng), uni(rng), uni(rng)}, {uni(rng), uni(rng), uni(rng)}, 2.0, 20.0};
    s.t0 = 0.0;
    s.t = 2.0;
    s.coupling = field::UniformInSpace{TimeProfile::gaussian_pulse(0.8, 1.0, 0.4)};
    CHECK(field::entanglement_L_gaussian(s) >= 0.0);
    CHECK(field::entanglement_L_quadrature(s) >= 0.0);
  }
}
