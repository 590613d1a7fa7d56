// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "eprbkit/lattice.hpp"

using namespace eprbkit;
using lattice::LatticeConfig;
using lattice::LatticePacket;
using lattice::LatticeScenario;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// Moving packets on an 8-site ring, generic analyzers, constant coupling.
LatticeScenario default_scenario() {
  LatticeScenario s;
  s.config = {8, 1.0, 1.0};
  s.packet1 = {2.0, 0.6, 1.0};
  s.packet2 = {5.0, -0.6, 1.0};
  s.epsilon = 0.01;
  s.t0 = 0.0;
  s.t = 3.0;
  s.analyzers = {Eigen::Vector3d{0.3, -0.5, 0.81}.normalized(),
                 Eigen::Vector3d{-0.7, 0.2, 0.4}.normalized()};
  return s;
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("single-particle lattice hamiltonian and propagator") {
  const LatticeConfig config{6, 0.5, 1.5};
  const Eigen::MatrixXd h = lattice::single_particle_hamiltonian(config);

  CHECK(max_abs(Eigen::MatrixXcd(h - h.transpose())) == 0.0);
  // Periodic Laplacian annihilates the constant vector.
  CHECK((h * Eigen::VectorXd::Ones(6)).norm() < 1e-14);
  CHECK(h(0, 0) == doctest::Approx(1.0 / (1.5 * 0.25)));

  // Group property and unitarity of the spectral propagator.
  const Eigen::MatrixXcd p1 = lattice::single_particle_propagator(config, 0.7);
  const Eigen::MatrixXcd p2 = lattice::single_particle_propagator(config, 1.9);
  const Eigen::MatrixXcd p12 = lattice::single_particle_propagator(config, 2.6);
  CHECK(max_abs(p1 * p2 - p12) <= 1e-12);
  CHECK(max_abs(p1 * p1.adjoint() - Eigen::MatrixXcd::Identity(6, 6)) <= 1e-12);
}

TEST_CASE("sampled packets are normalized and centered") {
  const LatticeConfig config{8, 1.0, 1.0};
  const Eigen::VectorXcd c = lattice::sample_packet(config, {3.0, 0.4, 2.0});
  CHECK(c.norm() == doctest::Approx(1.0).epsilon(1e-14));
  Eigen::Index peak;
  c.cwiseAbs().maxCoeff(&peak);
  CHECK(peak == 3);
}

TEST_CASE("free evolution cannot entangle the spins") {
  LatticeScenario s = default_scenario();
  s.epsilon = 0.0;
  const double z = s.analyzers.n1.z() * s.analyzers.n2.z();
  CHECK(lattice::lattice_exact_correlation(s) == doctest::Approx(-z).epsilon(1e-12));
  CHECK(lattice::lattice_perturbative_correlation(s) == doctest::Approx(-z).epsilon(1e-12));

  // No elapsed time at all.
  LatticeScenario frozen = default_scenario();
  frozen.t = frozen.t0;
  CHECK(lattice::lattice_exact_correlation(frozen) == doctest::Approx(-z).epsilon(1e-12));
}

TEST_CASE("exact and perturbative correlations agree at small epsilon") {
  LatticeScenario s = default_scenario();
  s.epsilon = 1e-3;
  const double exact = lattice::lattice_exact_correlation(s);
  const double pert = lattice::lattice_perturbative_correlation(s);
  CHECK(std::abs(exact - pert) < 1e-5);
}

TEST_CASE("first-order residual vanishes faster than epsilon squared") {
  // The interaction maps the occupied spin sector strictly into the
  // flipped one, and the observable takes the same diagonal value on
  // both, so the correlation is its free value plus a coherence term that
  // is odd in epsilon: even orders cancel exactly and the first-order
  // residual is cubic. The measured slope doubles as a stringent check on
  // the first-order coefficient itself: any error there would flatten the
  // slope toward one.
  LatticeScenario s = default_scenario();
  std::vector<double> log_eps, log_diff;
  for (const double eps : {3e-2, 1e-2, 3e-3}) {
    s.epsilon = eps;
    const double diff = std::abs(lattice::lattice_exact_correlation(s) -
                                 lattice::lattice_perturbative_correlation(s));
    REQUIRE(diff > 0.0);
    log_eps.push_back(std::log(eps));
    log_diff.push_back(std::log(diff));
  }
  const double slope = slope_fit(log_eps, log_diff);
  CHECK(slope == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("stepped evolution matches the single-exponential path") {
  LatticeScenario s = default_scenario();
  s.config.sites = 6;
  s.packet1.center = 1.5;
  s.packet2.center = 3.5;
  s.epsilon = 0.05;
  const double direct = lattice::lattice_exact_correlation(s);

  LatticeScenario stepped = s;
  stepped.kappa_time_constant = false;  // force the splitting path
  stepped.time_steps = 512;
  CHECK(std::abs(lattice::lattice_exact_correlation(stepped) - direct) < 1e-6);
}

TEST_CASE("lattice entanglement integral converges to the continuum closed form") {
  // Fixed box of length 8 and refined spacing. Heavy packets keep the
  // spreading width well inside the box so the periodic wrap stays
  // negligible against the discretization error being measured.
  const double box = 8.0;
  std::vector<double> errors;
  for (const int sites : {8, 16, 32}) {
    LatticeScenario s;
    s.config = {sites, box / sites, 5.0};
    s.packet1 = {3.2, 0.1, 2.0};
    s.packet2 = {4.8, -0.1, 2.0};
    s.kappa_time = field::TimeProfile::constant(0.5);
    s.t0 = 0.0;
    s.t = 1.5;
    errors.push_back(std::abs(lattice::lattice_entanglement_L(s) - lattice::continuum_limit_L(s)));
  }
  CHECK(errors[1] < errors[0]);
  CHECK(errors[2] < errors[1]);
}

TEST_CASE("resource guard on the exact path") {
  LatticeScenario s = default_scenario();
  s.config.sites = 17;
  CHECK_THROWS_AS((void)lattice::lattice_exact_correlation(s), ResourceError);
  // The perturbative path only needs single-particle evolution.
  CHECK_NOTHROW((void)lattice::lattice_entanglement_L(s));
}

TEST_CASE("spatially-varying coupling enters through the site weights") {
  LatticeScenario s = default_scenario();
  s.epsilon = 1e-3;
  s.kappa_sites.assign(8, 0.0);
  s.kappa_sites[3] = 1.0;
  s.kappa_sites[4] = 1.0;  // interaction only where the packets meet
  const double exact = lattice::lattice_exact_correlation(s);
  const double pert = lattice::lattice_perturbative_correlation(s);
  CHECK(std::abs(exact - pert) < 1e-5);
  CHECK(lattice::lattice_entanglement_L(s) > 0.0);
}
