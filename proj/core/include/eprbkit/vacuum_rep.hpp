// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file vacuum_rep.hpp
 * @brief The vacuum representation: every piece of initial-condition
 *        information is moved from the state vector into the operators by
 *        conjugating with V(theta) = exp(theta W).
 *
 * W is the skew-hermitian pair generator built from the two occupied
 * single-particle amplitudes,
 *
 *   W = sum_{k,l} ( psi11_k psi22_l  adag_k adag_l
 *                 - psi11_k* psi22_l* a_l a_k ),
 *
 * with k over species-1 spin-up modes and l over species-2 spin-down
 * modes. On the vacuum it obeys W^{2n}|0> = (-1)^n |0> and
 * W^{2n+1}|0> = (-1)^n |psi0>, so V(theta)|0> = cos(theta)|0> +
 * sin(theta)|psi0>. Matrix elements are invariant under the conjugation,
 * and conjugated field operators are unchanged wherever the pair
 * amplitudes vanish (support locality).
 *
 * W mixes particle-number sectors, so everything here runs on full-space
 * bases; dense conjugation is intended for small mode sets, the
 * matrix-free apply_* paths scale to 12 modes.
 */

#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "eprbkit/fock.hpp"

namespace eprbkit::vacrep {

using cxd = std::complex<double>;

/// Pair amplitudes psi_[1]1 and psi_[2]2 over the corresponding modes of a
/// mode set (site-sampled wavefunctions in the lattice case), unit norm each.
class PairAmplitude {
 public:
  PairAmplitude(fock::ModeSet modes, Eigen::VectorXcd psi11, Eigen::VectorXcd psi22);

  const fock::ModeSet& mode_set() const { return modes_; }
  /// Mode-set indices of the species-1 spin-up modes, aligned with psi11().
  const std::vector<std::size_t>& modes11() const { return modes11_; }
  const std::vector<std::size_t>& modes22() const { return modes22_; }
  const Eigen::VectorXcd& psi11() const { return psi11_; }
  const Eigen::VectorXcd& psi22() const { return psi22_; }

  /// Amplitude attached to one mode: psi11 on (1,1) modes, psi22 on (2,2)
  /// modes, identically zero on the spin-flipped families.
  cxd amplitude_at(const fock::Mode& m) const;

  /// |amplitude| above this counts as support.
  static constexpr double kSupportThreshold = 1e-14;
  bool in_support(const fock::Mode& m) const;

 private:
  fock::ModeSet modes_;
  std::vector<std::size_t> modes11_;
  std::vector<std::size_t> modes22_;
  Eigen::VectorXcd psi11_;
  Eigen::VectorXcd psi22_;
};

/// Ladder-term form of W (two creation and two annihilation terms per
/// mode pair).
std::vector<fock::LadderTerm> w_terms(const PairAmplitude& pair);

/// Dense W over a full-space basis; skew-hermitian within 1e-12.
fock::FockOperator build_W(const PairAmplitude& pair,
                           std::shared_ptr<const fock::Basis> basis);

/// Dense V(theta) = exp(theta W), unitary within 1e-12.
fock::FockOperator build_V(const PairAmplitude& pair, double theta,
                           std::shared_ptr<const fock::Basis> basis);

/// Matrix-free W|v>.
fock::FockVector apply_W(const PairAmplitude& pair, const fock::FockVector& v);

/// Matrix-free V(theta)|v> by the Taylor series of exp(theta W); the
/// spectrum of W is bounded so the series terminates quickly.
fock::FockVector apply_V(const PairAmplitude& pair, double theta, const fock::FockVector& v);

/// |psi0> = W|0> restricted to the creation part: the normalized
/// two-particle pair state.
fock::FockVector pair_state(const PairAmplitude& pair,
                            std::shared_ptr<const fock::Basis> basis);

/// V^dagger A V for a unitary v_op (checked within 1e-10); spectrum preserved.
fock::FockOperator transform_operator(const fock::FockOperator& v_op,
                                      const fock::FockOperator& a);

/// Closed-form [phi_m, W]: the smeared creation operator of the opposite
/// family weighted by the pair amplitude at m; zero for spin-flipped
/// families or outside the support.
fock::FockOperator commutator_phi_W(const PairAmplitude& pair, const fock::Mode& m,
                                    std::shared_ptr<const fock::Basis> basis);

struct LocalityDeviation {
  fock::Mode mode;
  double deviation = 0.0;      // max |phi_V - phi| entrywise
  bool outside_support = false;
};

struct VacuumRepReport {
  double rotation_error = 0.0;    // || V(theta)|0> - cos|0> - sin|psi0> ||
  double invariance_error = 0.0;  // vacuum-rep vs standard expectation gap
  std::vector<LocalityDeviation> mode_deviations;       // every mode
  std::vector<LocalityDeviation> locality_violations;   // outside support, > 1e-10
};

/// Deviation above this counts as a locality violation outside the support.
inline constexpr double kLocalityTolerance = 1e-10;

/**
 * Conjugate every mode's annihilation operator with V(theta) and compare
 * against the untransformed operator. Modes outside their own pair
 * amplitude's support must be unchanged within 1e-10. Also fills the
 * rotation error at the same theta and the matrix-element invariance gap
 * of the spin-correlation observable (z-z analyzers).
 */
VacuumRepReport locality_support_check(const PairAmplitude& pair,
                                       std::shared_ptr<const fock::Basis> basis,
                                       double theta = 1.5707963267948966);

/**
 * Max deviation between exact conjugation V^dagger phi_m V at theta = pi/2
 * and the nested-commutator series truncated at `order`:
 *   phi + (pi/2)[phi,W] + (1/2!)(pi/2)^2[[phi,W],W] + ...
 */
double bch_expansion_check(const PairAmplitude& pair, const fock::Mode& m, int order,
                           std::shared_ptr<const fock::Basis> basis);

}  // namespace eprbkit::vacrep
