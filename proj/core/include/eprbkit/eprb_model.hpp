// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file eprb_model.hpp
 * @brief The zero-dimensional EPRB models: a 16-dimensional first-quantized
 *        two-particle system and the equivalent four-mode Fock model.
 *
 * Both models carry one two-valued species label and one spin-1/2 per
 * particle. Entanglement is generated by the exponential of a rank-two
 * hermitian generator that rotates the product state |[1],1,[2],2> into the
 * singlet at angle pi/4. The spin-correlation observable is the product of
 * the species-1 spin projection along n1 with the species-2 projection
 * along n2; its expectation obeys
 *
 *   C(gamma) = -(1 - sin 2*gamma) n1z n2z - sin(2*gamma) n1.n2,
 *
 * which both models must reproduce exactly.
 *
 * First-quantized product basis index: slot order (particle 1: species,
 * spin; particle 2: species, spin), i.e.
 * idx = ((r-1)*2 + (i-1))*4 + (s-1)*2 + (j-1).
 */

#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "eprbkit/analyzers.hpp"
#include "eprbkit/fock.hpp"

namespace eprbkit::model {

using cxd = std::complex<double>;

inline constexpr int kTwoParticleDim = 16;

enum class Axis { x, y, z };

/// Result of one Pauli operator acting on a spin basis state:
/// sigma_axis |alpha_i> = coefficient |alpha_out>.
struct PauliAction {
  cxd coefficient;
  int spin_out;
};

/// Single-particle Pauli action on the spin index (1 = up, 2 = down).
PauliAction pauli_apply(Axis axis, int spin_index);

/// 2x2 matrix of n . sigma in the (up, down) spin basis.
Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n);

// --- first-quantized model -------------------------------------------------

/// Product basis vector |species r, spin i; species s, spin j>.
Eigen::VectorXcd product_state(int r, int i, int s, int j);

/// Antisymmetrized physical state |[r],i,[s],j> (overcomplete family);
/// vanishes identically when (r,i) = (s,j).
Eigen::VectorXcd antisymmetric_state(int r, int i, int s, int j);

/// Definite angular-momentum states |J,Jz> of the one-particle-per-species
/// subspace; valid (J, Jz): (0,0), (1,-1), (1,0), (1,1).
Eigen::VectorXcd angular_momentum_state(int j, int jz);

/// Physical-subspace membership: the amplitude tensor is antisymmetric
/// under the simultaneous swap of the two particle slots.
bool is_physical_state(const Eigen::VectorXcd& v, double tol = 1e-12);

/// Species-projected spin operator n . sigma_[species] on the product space.
Eigen::MatrixXcd species_spin_operator(int species, const Eigen::Vector3d& n);

/// Total angular momentum component (J_x, J_y, J_z) on the product space.
Eigen::MatrixXcd total_angular_momentum(Axis axis);

/// The entanglement generator g (hermitian, rank two).
Eigen::MatrixXcd build_g();

/// u_E(gamma) = exp(-i gamma g); evaluated both as the exponential and in
/// the closed form I' + cos(gamma) I2 - i sin(gamma) g, which must agree
/// within 1e-12.
Eigen::MatrixXcd build_uE(double gamma);

/// Spin-correlation observable (n1 . sigma_[1])(n2 . sigma_[2]).
Eigen::MatrixXcd build_xi(const AnalyzerPair& analyzers);

/// The closed-form correlation -(1 - sin 2g) n1z n2z - sin(2g) n1.n2.
double correlation_closed_form(double gamma, const AnalyzerPair& analyzers);

/// Matrix-computed first-quantized correlation, cross-checked against the
/// closed form within 1e-12 on every call.
double correlation_1q(double gamma, const AnalyzerPair& analyzers);

// --- Fock-space model ------------------------------------------------------

/// g tensor components over (species, spin) pairs, Eq. basis of the
/// two-body entangling generator. Indices are (r', i', s', j'; r, i, s, j).
cxd g_component(int rp, int ip, int sp, int jp, int r, int i, int s, int j);

/// Reduced spin-correlation kernel over spin indices alone.
cxd xi_tilde(int i_prime, int j_prime, int i, int j, const AnalyzerPair& analyzers);

/// Two-body coefficient tensor of the entangling generator over the
/// four-mode model, for use with fock::build_two_body.
fock::TwoBodyCoeffs g_two_body_coeffs(const fock::ModeSet& modes);

/// Full two-body coefficient tensor of the spin-correlation observable
/// (species-delta structure times the spin kernel).
fock::TwoBodyCoeffs xi_two_body_coeffs(const fock::ModeSet& modes,
                                       const AnalyzerPair& analyzers);

/**
 * Site-local entangling generator as ladder terms over any mode set whose
 * internal labels are (species, spin) pairs: at every site k,
 * (w_k / 2) sum adag([s']j',k) adag([r']i',k) g a([r]i,k) a([s]j,k).
 * For the zero-dimensional model pass a single weight of 1.
 */
std::vector<fock::LadderTerm> entangling_terms(const fock::ModeSet& modes,
                                               const std::vector<double>& site_weights);

/// Spin-correlation observable as ladder terms:
/// sum over species-1 sites x, species-2 sites y and spin indices of
/// adag([2]j',y) adag([1]i',x) xi_tilde a([1]i,x) a([2]j,y).
std::vector<fock::LadderTerm> spin_correlation_terms(const fock::ModeSet& modes,
                                                     const AnalyzerPair& analyzers);

/// Entangling generator over a basis (dense).
fock::FockOperator build_g_fock(std::shared_ptr<const fock::Basis> basis,
                                const std::vector<double>& site_weights = {1.0});

/// Spin-correlation observable over a basis (dense).
fock::FockOperator build_xi_fock(std::shared_ptr<const fock::Basis> basis,
                                 const AnalyzerPair& analyzers);

/// Fock-space correlation C_F(gamma) on the four-mode model.
double correlation_fock(double gamma, const AnalyzerPair& analyzers);

// --- estimator ---------------------------------------------------------------

/// Least-squares estimate of the entanglement scale from correlation data.
struct FitResult {
  double s_hat = 0.0;          ///< fitted coefficient of the -n1.n2 term (sin 2*gamma)
  double residual = 0.0;       ///< 2-norm of the fit residual
  double standard_error = 0.0; ///< residual-based standard error of s_hat
  std::size_t n_samples = 0;
};

/**
 * Fit the single scalar s in C = -(1-s) n1z n2z - s n1.n2 by linear least
 * squares. s equals sin(2*gamma) exactly; read s ~= 2*gamma for small
 * angles. Throws EstimationError for fewer than two samples or a design
 * whose two regressors are collinear (all n1z n2z = n1.n2).
 */
FitResult fit_two_gamma(const std::vector<CorrelationSample>& samples);

}  // namespace eprbkit::model
