// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/lattice.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "eprbkit/quadrature.hpp"

namespace eprbkit::lattice {

namespace {

using fock::Basis;
using fock::FockOperator;
using fock::FockVector;
using fock::Mode;
using fock::ModeSet;

constexpr double kPi = std::numbers::pi;

/// Spectral data of the single-particle Hamiltonian, reused across the
/// many propagator evaluations of one scenario.
struct SingleParticleSpectral {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  explicit SingleParticleSpectral(const LatticeConfig& config) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        single_particle_hamiltonian(config));
    eigenvalues = solver.eigenvalues();
    eigenvectors = solver.eigenvectors();
  }

  Eigen::VectorXcd evolve(const Eigen::VectorXcd& c0, double dt) const {
    const Eigen::VectorXcd phases =
        (cxd(0.0, -dt) * eigenvalues.array().cast<cxd>()).exp().matrix();
    return eigenvectors.cast<cxd>() *
           (phases.array() * (eigenvectors.transpose().cast<cxd>() * c0).array()).matrix();
  }
};

std::vector<double> site_weights(const LatticeScenario& s) {
  std::vector<double> w(static_cast<std::size_t>(s.config.sites));
  for (int k = 0; k < s.config.sites; ++k) {
    w[static_cast<std::size_t>(k)] = s.kappa_at_site(k) / s.config.spacing;
  }
  return w;
}

}  // namespace

void LatticeScenario::validate() const {
  config.validate();
  if (!(packet1.width_param > 0.0) || !(packet2.width_param > 0.0)) {
    throw DomainError("LatticeScenario: packet width parameters must be > 0");
  }
  if (t < t0) throw DomainError("LatticeScenario: t must be >= t0");
  if (epsilon < 0.0) throw DomainError("LatticeScenario: epsilon must be >= 0");
  if (!kappa_sites.empty() &&
      kappa_sites.size() != static_cast<std::size_t>(config.sites)) {
    throw DomainError("LatticeScenario: kappa_sites must have one value per site");
  }
  if (time_steps < 1) throw DomainError("LatticeScenario: time_steps must be >= 1");
}

std::shared_ptr<const Basis> lattice_sector_basis(const LatticeConfig& config) {
  config.validate();
  const ModeSet modes = ModeSet::lattice(config.sites, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  fock::SectorFilter sector;
  sector.per_species = {1, 1};
  return fock::enumerate_basis(modes, sector);
}

FockOperator lattice_free_hamiltonian(const LatticeConfig& config,
                                      std::shared_ptr<const Basis> basis) {
  const ModeSet& modes = basis->mode_set();
  const Eigen::MatrixXd h_sp = single_particle_hamiltonian(config);
  fock::OneBodyCoeffs c = fock::OneBodyCoeffs::zero(modes.size());
  for (int species = 1; species <= 2; ++species) {
    for (int spin = 1; spin <= 2; ++spin) {
      for (int k = 0; k < config.sites; ++k) {
        for (int l = 0; l < config.sites; ++l) {
          if (h_sp(k, l) == 0.0) continue;
          const auto row = modes.index_of(
              {static_cast<std::int8_t>(species), static_cast<std::int8_t>(spin), k});
          const auto col = modes.index_of(
              {static_cast<std::int8_t>(species), static_cast<std::int8_t>(spin), l});
          c.c(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = h_sp(k, l);
        }
      }
    }
  }
  return fock::build_one_body(c, std::move(basis));
}

FockOperator lattice_interaction(const LatticeScenario& scenario,
                                 std::shared_ptr<const Basis> basis) {
  auto terms = model::entangling_terms(basis->mode_set(), site_weights(scenario));
  return fock::build_from_terms(terms, std::move(basis));
}

FockOperator lattice_observable(const LatticeScenario& scenario,
                                std::shared_ptr<const Basis> basis) {
  auto terms = model::spin_correlation_terms(basis->mode_set(), scenario.analyzers);
  return fock::build_from_terms(terms, std::move(basis));
}

FockVector lattice_initial_state(const LatticeScenario& s,
                                 std::shared_ptr<const Basis> basis) {
  const ModeSet& modes = basis->mode_set();
  const Eigen::VectorXcd c1 = sample_packet(s.config, s.packet1);
  const Eigen::VectorXcd c2 = sample_packet(s.config, s.packet2);
  FockVector psi(std::move(basis));
  for (int k = 0; k < s.config.sites; ++k) {
    for (int l = 0; l < s.config.sites; ++l) {
      const auto m1 = modes.index_of({1, 1, k});
      const auto m2 = modes.index_of({2, 2, l});
      // adag(1,1,k) adag(2,2,l) |0>: species-2 modes order after species-1,
      // so both creations carry positive sign.
      const fock::BasisState state =
          (fock::BasisState{1} << m1) | (fock::BasisState{1} << m2);
      psi.amplitudes()[static_cast<Eigen::Index>(psi.basis().index_of(state))] +=
          c1[k] * c2[l];
    }
  }
  return psi;
}

Eigen::MatrixXd single_particle_hamiltonian(const LatticeConfig& config) {
  config.validate();
  const int n = config.sites;
  const double hop = 1.0 / (2.0 * config.mass * config.spacing * config.spacing);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    h(k, k) += 2.0 * hop;
    const int next = (k + 1) % n;
    h(k, next) -= hop;
    h(next, k) -= hop;
  }
  return h;
}

Eigen::MatrixXcd single_particle_propagator(const LatticeConfig& config, double dt) {
  SingleParticleSpectral spectral(config);
  const Eigen::VectorXcd phases =
      (cxd(0.0, -dt) * spectral.eigenvalues.array().cast<cxd>()).exp().matrix();
  return spectral.eigenvectors.cast<cxd>() * phases.asDiagonal() *
         spectral.eigenvectors.transpose().cast<cxd>();
}

Eigen::VectorXcd sample_packet(const LatticeConfig& config, const LatticePacket& packet) {
  config.validate();
  if (!(packet.width_param > 0.0)) {
    throw DomainError("sample_packet: width parameter must be > 0");
  }
  Eigen::VectorXcd c(config.sites);
  for (int k = 0; k < config.sites; ++k) {
    const double dx = config.spacing * k - packet.center;
    c[k] = std::exp(cxd(-0.5 * packet.width_param * dx * dx,
                        config.mass * packet.velocity * dx));
  }
  const double norm = c.norm();
  if (norm == 0.0) throw DomainError("sample_packet: packet has no support on the lattice");
  return c / norm;
}

double lattice_entanglement_L(const LatticeScenario& s) {
  s.validate();
  const SingleParticleSpectral spectral(s.config);
  const Eigen::VectorXcd c1 = sample_packet(s.config, s.packet1);
  const Eigen::VectorXcd c2 = sample_packet(s.config, s.packet2);
  const auto integrand = [&](double tpp) {
    const Eigen::VectorXcd e1 = spectral.evolve(c1, tpp - s.t0);
    const Eigen::VectorXcd e2 = spectral.evolve(c2, tpp - s.t0);
    double sum = 0.0;
    for (int k = 0; k < s.config.sites; ++k) {
      sum += s.kappa_at_site(k) * std::norm(e1[k]) * std::norm(e2[k]);
    }
    return 2.0 * s.kappa_time(tpp) * sum / s.config.spacing;
  };
  return quad::integrate_adaptive(integrand, s.t0, s.t, 1e-13, 1e-9, 36).value;
}

double lattice_perturbative_correlation(const LatticeScenario& s) {
  const double l = lattice_entanglement_L(s);
  const double z = s.analyzers.n1.z() * s.analyzers.n2.z();
  const double dot = s.analyzers.n1.dot(s.analyzers.n2);
  const double eps_l = s.epsilon * l;
  return -(1.0 - eps_l) * z - eps_l * dot;
}

double lattice_exact_correlation(const LatticeScenario& s) {
  s.validate();
  if (s.config.sites > kMaxExactSites) {
    throw ResourceError("lattice_exact_correlation: sites beyond the exact-evolution budget");
  }
  const auto basis = lattice_sector_basis(s.config);
  const FockOperator h0 = lattice_free_hamiltonian(s.config, basis);
  const FockOperator h1 = lattice_interaction(s, basis);
  const FockOperator xi = lattice_observable(s, basis);

  FockVector psi = lattice_initial_state(s, basis);
  if (s.kappa_time_constant) {
    FockOperator h = h0;
    h += cxd(s.epsilon * s.kappa_time(s.t0), 0.0) * h1;
    psi = fock::Propagator(h).apply(s.t - s.t0, psi);
  } else {
    // Strang splitting with midpoint-sampled coupling; O(dt^2) global error.
    const double dt = (s.t - s.t0) / s.time_steps;
    const fock::Propagator free_prop(h0);
    const fock::Propagator int_prop(h1);
    for (int step = 0; step < s.time_steps; ++step) {
      const double t_mid = s.t0 + (step + 0.5) * dt;
      psi = free_prop.apply(0.5 * dt, psi);
      psi = int_prop.apply(s.epsilon * s.kappa_time(t_mid) * dt, psi);
      psi = free_prop.apply(0.5 * dt, psi);
    }
  }
  const cxd val = fock::matrix_element(psi, xi, psi);
  if (std::abs(val.imag()) > 1e-10) {
    throw Error("lattice_exact_correlation: correlation has a nonreal part beyond 1e-10");
  }
  return val.real();
}

double continuum_limit_L(const LatticeScenario& s) {
  s.validate();
  if (!s.kappa_sites.empty()) {
    throw DomainError("continuum_limit_L: defined for spatially-uniform coupling only");
  }
  const double m = s.config.mass;
  const auto width_at = [&](double alpha, double dt) {
    const double r = alpha * dt / m;
    return alpha / (1.0 + r * r);
  };
  const auto integrand = [&](double tpp) {
    const double dt = tpp - s.t0;
    const double a1 = width_at(s.packet1.width_param, dt);
    const double a2 = width_at(s.packet2.width_param, dt);
    const double c1 = s.packet1.center + s.packet1.velocity * dt;
    const double c2 = s.packet2.center + s.packet2.velocity * dt;
    // 1-D analogue of the Gaussian overlap: densities (A/pi)^(1/2) each,
    // spatial integral sqrt(pi/(a1+a2)) exp(-a1 a2/(a1+a2) (c1-c2)^2).
    const double overlap = std::sqrt(kPi / (a1 + a2)) *
                           std::exp(-(a1 * a2 / (a1 + a2)) * (c1 - c2) * (c1 - c2));
    return 2.0 * s.kappa_time(tpp) * std::sqrt(a1 * a2) / kPi * overlap;
  };
  return quad::integrate_adaptive(integrand, s.t0, s.t, 1e-13, 1e-9, 36).value;
}

}  // namespace eprbkit::lattice
