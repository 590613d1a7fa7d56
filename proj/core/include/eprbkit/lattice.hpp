// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lattice.hpp
 * @brief One-dimensional periodic lattice cross-check of the first-order
 *        field-theory correlation.
 *
 * The continuum theory is discretized on N sites with spacing a: the free
 * part is the central-difference Laplacian, the interaction is the
 * site-local entangling generator, and field operators map to ladder
 * operators through phi(x_k) = c_k / sqrt(a). Exact evolution in the
 * one-particle-per-species sector provides the oracle against which the
 * first-order (perturbative) correlation is validated: their difference
 * must scale as epsilon^2.
 */

#pragma once

#include <Eigen/Dense>

#include "eprbkit/eprb_model.hpp"
#include "eprbkit/fock.hpp"
#include "eprbkit/wavepackets.hpp"

namespace eprbkit::lattice {

using cxd = std::complex<double>;

/// Exact evolution is budgeted at this many sites.
inline constexpr int kMaxExactSites = 16;

struct LatticeConfig {
  int sites = 8;
  double spacing = 1.0;  // a > 0
  double mass = 1.0;
  // boundary is periodic and the lattice is one-dimensional by design

  void validate() const {
    if (sites < 2) throw DomainError("LatticeConfig: need at least two sites");
    if (!(spacing > 0.0)) throw DomainError("LatticeConfig: spacing must be > 0");
    if (!(mass > 0.0)) throw DomainError("LatticeConfig: mass must be > 0");
  }
};

/// Gaussian packet parameters sampled onto lattice sites (1-D).
struct LatticePacket {
  double center = 0.0;
  double velocity = 0.0;
  double width_param = 1.0;  // alpha
};

/// Scenario mirroring FieldScenario on the lattice. kappa(x_k, t) =
/// kappa_sites[k] * kappa_time(t); an empty kappa_sites means uniform 1.
struct LatticeScenario {
  LatticeConfig config;
  LatticePacket packet1;  // species 1, spin up
  LatticePacket packet2;  // species 2, spin down
  std::vector<double> kappa_sites;
  field::TimeProfile kappa_time = field::TimeProfile::constant(1.0);
  bool kappa_time_constant = true;  // enables the single-exponential exact path
  double epsilon = 0.0;
  double t0 = 0.0;
  double t = 1.0;
  model::AnalyzerPair analyzers{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}};
  int time_steps = 2048;  // stepping for time-dependent couplings

  void validate() const;
  double site_position(int k) const { return config.spacing * k; }
  double kappa_at_site(int k) const {
    return kappa_sites.empty() ? 1.0 : kappa_sites[static_cast<std::size_t>(k)];
  }
};

/// N x N single-particle Hamiltonian: central-difference -d^2/dx^2 / (2m),
/// periodic wrap.
Eigen::MatrixXd single_particle_hamiltonian(const LatticeConfig& config);

/// All four (species, spin) families at every site, restricted to one
/// particle per species: the sector the interacting dynamics lives in.
std::shared_ptr<const fock::Basis> lattice_sector_basis(const LatticeConfig& config);

/// Free Fock Hamiltonian (kinetic term for every family) over `basis`.
fock::FockOperator lattice_free_hamiltonian(const LatticeConfig& config,
                                            std::shared_ptr<const fock::Basis> basis);

/// Site-local entangling interaction at unit time profile, weighted by
/// kappa_k / spacing.
fock::FockOperator lattice_interaction(const LatticeScenario& scenario,
                                       std::shared_ptr<const fock::Basis> basis);

/// Spin-correlation observable over the lattice modes.
fock::FockOperator lattice_observable(const LatticeScenario& scenario,
                                      std::shared_ptr<const fock::Basis> basis);

/// |psi0> with packet1 in the species-1 spin-up family and packet2 in the
/// species-2 spin-down family.
fock::FockVector lattice_initial_state(const LatticeScenario& scenario,
                                       std::shared_ptr<const fock::Basis> basis);

/// exp(-i H_sp dt) by spectral decomposition of the discrete Laplacian.
Eigen::MatrixXcd single_particle_propagator(const LatticeConfig& config, double dt);

/// Normalized lattice samples of the Gaussian packet (sum |c_k|^2 = 1).
Eigen::VectorXcd sample_packet(const LatticeConfig& config, const LatticePacket& packet);

/// Lattice entanglement integral
///   L(t) = 2 Int dt'' w(t'') (1/a) sum_k kappa_k |c1_k(t'')|^2 |c2_k(t'')|^2
/// with c_i evolved by the exact free lattice propagator.
double lattice_entanglement_L(const LatticeScenario& scenario);

/// First-order correlation: correlation_field applied to the lattice L.
double lattice_perturbative_correlation(const LatticeScenario& scenario);

/// Exact correlation by full evolution of the interacting lattice
/// Hamiltonian in the one-particle-per-species sector. Throws
/// ResourceError beyond kMaxExactSites or the sector budget.
double lattice_exact_correlation(const LatticeScenario& scenario);

/// Continuum (a -> 0) closed form of the 1-D entanglement integral for the
/// same Gaussian data; the refinement limit of lattice_entanglement_L.
double continuum_limit_L(const LatticeScenario& scenario);

}  // namespace eprbkit::lattice
