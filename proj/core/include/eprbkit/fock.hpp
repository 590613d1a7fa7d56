// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Exact finite-dimensional fermionic Fock-space engine.
 *
 * Signed ladder operators over occupation bit states, operator assembly
 * from one- and two-body coefficient tensors, unitary evolution by
 * eigendecomposition of a hermitian generator, and expectation values.
 *
 * Sign convention: acting with the ladder operator of mode k picks up
 * (-1)^(number of occupied modes preceding k in ModeSet order).
 */

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "eprbkit/basis.hpp"
#include "eprbkit/modes.hpp"

namespace eprbkit::fock {

using cxd = std::complex<double>;

/// Complex amplitude vector over an enumerated occupation basis.
class FockVector {
 public:
  explicit FockVector(std::shared_ptr<const Basis> basis);
  FockVector(std::shared_ptr<const Basis> basis, Eigen::VectorXcd amplitudes);

  /// Unit amplitude on the empty state; requires the vacuum to belong to the basis.
  static FockVector vacuum(std::shared_ptr<const Basis> basis);
  /// Unit amplitude on one occupation pattern.
  static FockVector unit(std::shared_ptr<const Basis> basis, BasisState s);

  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }

  Eigen::VectorXcd& amplitudes() { return amplitudes_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  cxd amplitude(BasisState s) const;
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

  double norm() const { return amplitudes_.norm(); }
  FockVector normalized() const;

  /// <this|other>, conjugate-linear in *this.
  cxd inner(const FockVector& other) const;

  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  FockVector& operator*=(cxd scale);

  friend FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
  friend FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }
  friend FockVector operator*(cxd scale, FockVector v) { return v *= scale; }

 private:
  std::shared_ptr<const Basis> basis_;
  Eigen::VectorXcd amplitudes_;
};

/// Dense complex matrix over a Fock basis, with an optional hermiticity tag.
class FockOperator {
 public:
  FockOperator(std::shared_ptr<const Basis> basis, Eigen::MatrixXcd matrix,
               bool hermitian = false);

  static FockOperator identity(std::shared_ptr<const Basis> basis);
  static FockOperator zero(std::shared_ptr<const Basis> basis);

  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  bool hermitian_flag() const { return hermitian_; }
  /// Measured deviation from hermiticity, max |A - A^dagger| entrywise.
  double hermiticity_deviation() const;

  FockOperator adjoint() const;
  FockVector apply(const FockVector& v) const;

  FockOperator& operator+=(const FockOperator& rhs);
  FockOperator& operator-=(const FockOperator& rhs);
  FockOperator& operator*=(cxd scale);
  friend FockOperator operator+(FockOperator lhs, const FockOperator& rhs) { return lhs += rhs; }
  friend FockOperator operator-(FockOperator lhs, const FockOperator& rhs) { return lhs -= rhs; }
  friend FockOperator operator*(cxd scale, FockOperator a) { return a *= scale; }
  friend FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);

 private:
  std::shared_ptr<const Basis> basis_;
  Eigen::MatrixXcd matrix_;
  bool hermitian_;
};

/// One-body coefficient matrix zeta_1 indexed by (mode', mode).
struct OneBodyCoeffs {
  Eigen::MatrixXcd c;

  static OneBodyCoeffs zero(std::size_t n_modes) {
    return {Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n_modes),
                                   static_cast<Eigen::Index>(n_modes))};
  }
  static OneBodyCoeffs identity(std::size_t n_modes) {
    return {Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n_modes),
                                       static_cast<Eigen::Index>(n_modes))};
  }
};

/**
 * Two-body coefficient tensor zeta_2 indexed by (p', q'; p, q), the matrix
 * elements of a two-particle operator between product states. The
 * corresponding Fock operator is
 *
 *   (1/2) sum adag(q') adag(p') zeta_2(p', q'; p, q) a(p) a(q),
 *
 * with a(q) applied first.
 */
class TwoBodyCoeffs {
 public:
  explicit TwoBodyCoeffs(std::size_t n_modes);

  std::size_t n_modes() const { return n_; }

  cxd& at(std::size_t p_prime, std::size_t q_prime, std::size_t p, std::size_t q) {
    return data_[flat(p_prime, q_prime, p, q)];
  }
  cxd at(std::size_t p_prime, std::size_t q_prime, std::size_t p, std::size_t q) const {
    return data_[flat(p_prime, q_prime, p, q)];
  }

 private:
  std::size_t flat(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * n_ + b) * n_ + c) * n_ + d;
  }
  std::size_t n_;
  std::vector<cxd> data_;
};

/// Signed ladder action on a single occupation pattern.
/// Empty result means the action annihilates the state.
struct LadderResult {
  BasisState state;
  int sign;  // +1 or -1
};
std::optional<LadderResult> creation_on(BasisState s, std::size_t mode_index);
std::optional<LadderResult> annihilation_on(BasisState s, std::size_t mode_index);

/**
 * Creation operator action on a vector. The basis must be the full space
 * (sector-restricted vectors would leave their basis); builders below
 * handle sector-restricted matrices instead.
 */
FockVector apply_creation(const Mode& m, const FockVector& v);
/// Adjoint of apply_creation; annihilates the vacuum.
FockVector apply_annihilation(const Mode& m, const FockVector& v);

/**
 * Assemble sum adag(p') zeta_1(p', p) a(p) over the given basis.
 *
 * On a sector-restricted basis this is the compression P ZP of the full
 * operator; for number-conserving coefficients the compression coincides
 * with the restriction.
 */
FockOperator build_one_body(const OneBodyCoeffs& c, std::shared_ptr<const Basis> basis);

/// Assemble the two-body operator with the 1/2 prefactor and operator
/// ordering documented on TwoBodyCoeffs.
FockOperator build_two_body(const TwoBodyCoeffs& c, std::shared_ptr<const Basis> basis);

/// Sparse matrix of a single ladder operator over `basis` (full space).
Eigen::SparseMatrix<cxd> ladder_matrix(const Mode& m, bool dagger, const Basis& basis);

/// One ladder factor inside a normal-ordered product.
struct LadderOp {
  std::size_t mode_index;
  bool dagger;
};

/// coeff times a product of ladder operators, written left to right as in
/// operator notation: ops.front() acts last, ops.back() acts first.
struct LadderTerm {
  cxd coeff;
  std::vector<LadderOp> ops;
};

/// Sum of ladder terms assembled as a dense matrix over `basis`. Images
/// falling outside a sector-restricted basis are dropped (compression).
FockOperator build_from_terms(const std::vector<LadderTerm>& terms,
                              std::shared_ptr<const Basis> basis);

/// Matrix-free action of a sum of ladder terms on a vector.
FockVector apply_terms(const std::vector<LadderTerm>& terms, const FockVector& v);

/**
 * Unitary evolution exp(-i angle H) for a hermitian generator H, realized
 * through one eigendecomposition that can be reused across angles.
 */
class Propagator {
 public:
  /// Requires h hermitian within tolerance (max deviation 1e-12 relative
  /// to the largest entry); throws DomainError otherwise.
  explicit Propagator(const FockOperator& h);

  FockVector apply(double angle, const FockVector& v) const;
  FockOperator matrix(double angle) const;

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  std::shared_ptr<const Basis> basis_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// exp(-i angle h) v. For repeated angles construct a Propagator once.
FockVector evolve(const FockOperator& h, double angle, const FockVector& v);

/// <v|a|v>. Requires v normalized within 1e-6 and matching bases.
cxd expectation(const FockVector& v, const FockOperator& a);

/// <u|a|v> without the normalization requirement.
cxd matrix_element(const FockVector& u, const FockOperator& a, const FockVector& v);

}  // namespace eprbkit::fock
