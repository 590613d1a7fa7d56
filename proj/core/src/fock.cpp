// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/fock.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace eprbkit::fock {

namespace {

void require_same_basis(const Basis& a, const Basis& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": basis mismatch");
}

int sign_below(BasisState s, std::size_t mode_index) {
  const BasisState below = s & ((BasisState{1} << mode_index) - 1);
  return (std::popcount(below) & 1) ? -1 : +1;
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

// ---------------------------------------------------------------------------
// FockVector

FockVector::FockVector(std::shared_ptr<const Basis> basis)
    : basis_(std::move(basis)),
      amplitudes_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

FockVector::FockVector(std::shared_ptr<const Basis> basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size()) {
    throw DomainError("FockVector: amplitude count does not match basis size");
  }
}

FockVector FockVector::vacuum(std::shared_ptr<const Basis> basis) {
  return unit(std::move(basis), BasisState{0});
}

FockVector FockVector::unit(std::shared_ptr<const Basis> basis, BasisState s) {
  FockVector v(basis);
  v.amplitudes_[static_cast<Eigen::Index>(basis->index_of(s))] = 1.0;
  return v;
}

cxd FockVector::amplitude(BasisState s) const {
  return amplitudes_[static_cast<Eigen::Index>(basis_->index_of(s))];
}

FockVector FockVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("FockVector: cannot normalize the zero vector");
  return FockVector(basis_, amplitudes_ / n);
}

cxd FockVector::inner(const FockVector& other) const {
  require_same_basis(*basis_, other.basis(), "FockVector::inner");
  return amplitudes_.dot(other.amplitudes_);
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  require_same_basis(*basis_, rhs.basis(), "FockVector::operator+=");
  amplitudes_ += rhs.amplitudes_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  require_same_basis(*basis_, rhs.basis(), "FockVector::operator-=");
  amplitudes_ -= rhs.amplitudes_;
  return *this;
}

FockVector& FockVector::operator*=(cxd scale) {
  amplitudes_ *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// FockOperator

FockOperator::FockOperator(std::shared_ptr<const Basis> basis, Eigen::MatrixXcd matrix,
                           bool hermitian)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), hermitian_(hermitian) {
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw DomainError("FockOperator: matrix shape does not match basis size");
  }
  if (hermitian_) {
    const double tol = 1e-12 * (1.0 + max_abs(matrix_));
    if (hermiticity_deviation() > tol) {
      throw DomainError("FockOperator: hermitian flag set but matrix is not hermitian");
    }
  }
}

FockOperator FockOperator::identity(std::shared_ptr<const Basis> basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return FockOperator(std::move(basis), Eigen::MatrixXcd::Identity(n, n), true);
}

FockOperator FockOperator::zero(std::shared_ptr<const Basis> basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return FockOperator(std::move(basis), Eigen::MatrixXcd::Zero(n, n), true);
}

double FockOperator::hermiticity_deviation() const {
  return max_abs(matrix_ - matrix_.adjoint());
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(basis_, matrix_.adjoint(), hermitian_);
}

FockVector FockOperator::apply(const FockVector& v) const {
  require_same_basis(*basis_, v.basis(), "FockOperator::apply");
  return FockVector(basis_, matrix_ * v.amplitudes());
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs) {
  require_same_basis(*basis_, rhs.basis(), "FockOperator::operator+=");
  matrix_ += rhs.matrix_;
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& rhs) {
  require_same_basis(*basis_, rhs.basis(), "FockOperator::operator-=");
  matrix_ -= rhs.matrix_;
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

FockOperator& FockOperator::operator*=(cxd scale) {
  matrix_ *= scale;
  hermitian_ = hermitian_ && scale.imag() == 0.0;
  return *this;
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs) {
  require_same_basis(lhs.basis(), rhs.basis(), "FockOperator::operator*");
  return FockOperator(lhs.basis_ptr(), lhs.matrix() * rhs.matrix(), false);
}

// ---------------------------------------------------------------------------
// Ladder operations

std::optional<LadderResult> creation_on(BasisState s, std::size_t mode_index) {
  const BasisState bit = BasisState{1} << mode_index;
  if (s & bit) return std::nullopt;
  return LadderResult{s | bit, sign_below(s, mode_index)};
}

std::optional<LadderResult> annihilation_on(BasisState s, std::size_t mode_index) {
  const BasisState bit = BasisState{1} << mode_index;
  if (!(s & bit)) return std::nullopt;
  return LadderResult{s & ~bit, sign_below(s, mode_index)};
}

namespace {

template <typename LadderFn>
FockVector apply_ladder(const Mode& m, const FockVector& v, LadderFn&& ladder,
                        const char* what) {
  const Basis& basis = v.basis();
  if (!basis.mode_set().contains(m)) {
    throw DomainError(std::string(what) + ": mode " + to_string(m) + " not in mode set");
  }
  if (!basis.is_full()) {
    throw DomainError(std::string(what) +
                      ": ladder action on vectors requires the full-space basis");
  }
  const std::size_t k = basis.mode_set().index_of(m);
  FockVector out(v.basis_ptr());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const cxd a = v.amplitudes()[static_cast<Eigen::Index>(i)];
    if (a == cxd{0.0, 0.0}) continue;
    if (auto r = ladder(basis.state(i), k)) {
      out.amplitudes()[static_cast<Eigen::Index>(basis.index_of(r->state))] +=
          double(r->sign) * a;
    }
  }
  return out;
}

}  // namespace

FockVector apply_creation(const Mode& m, const FockVector& v) {
  return apply_ladder(m, v, [](BasisState s, std::size_t k) { return creation_on(s, k); },
                      "apply_creation");
}

FockVector apply_annihilation(const Mode& m, const FockVector& v) {
  return apply_ladder(m, v, [](BasisState s, std::size_t k) { return annihilation_on(s, k); },
                      "apply_annihilation");
}

// ---------------------------------------------------------------------------
// Operator assembly

FockOperator build_one_body(const OneBodyCoeffs& c, std::shared_ptr<const Basis> basis) {
  const std::size_t n = basis->mode_set().size();
  if (static_cast<std::size_t>(c.c.rows()) != n || static_cast<std::size_t>(c.c.cols()) != n) {
    throw DomainError("build_one_body: coefficient matrix must be n_modes x n_modes");
  }
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const BasisState s = basis->state(col);
    for (std::size_t p = 0; p < n; ++p) {
      const auto ann = annihilation_on(s, p);
      if (!ann) continue;
      for (std::size_t pp = 0; pp < n; ++pp) {
        const cxd coeff = c.c(static_cast<Eigen::Index>(pp), static_cast<Eigen::Index>(p));
        if (coeff == cxd{0.0, 0.0}) continue;
        const auto cre = creation_on(ann->state, pp);
        if (!cre) continue;
        if (!basis->contains(cre->state)) continue;  // compression onto the sector
        m(static_cast<Eigen::Index>(basis->index_of(cre->state)),
          static_cast<Eigen::Index>(col)) += coeff * double(ann->sign * cre->sign);
      }
    }
  }
  const bool herm = max_abs(m - m.adjoint()) <= 1e-12 * (1.0 + max_abs(m));
  return FockOperator(std::move(basis), std::move(m), herm);
}

FockOperator build_two_body(const TwoBodyCoeffs& c, std::shared_ptr<const Basis> basis) {
  const std::size_t n = basis->mode_set().size();
  if (c.n_modes() != n) {
    throw DomainError("build_two_body: coefficient tensor does not match mode count");
  }
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // (1/2) sum adag(q') adag(p') c(p',q',p,q) a(p) a(q), a(q) applied first.
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const BasisState s = basis->state(col);
    for (std::size_t q = 0; q < n; ++q) {
      const auto ann_q = annihilation_on(s, q);
      if (!ann_q) continue;
      for (std::size_t p = 0; p < n; ++p) {
        const auto ann_p = annihilation_on(ann_q->state, p);
        if (!ann_p) continue;
        for (std::size_t pp = 0; pp < n; ++pp) {
          const auto cre_p = creation_on(ann_p->state, pp);
          if (!cre_p) continue;
          for (std::size_t qp = 0; qp < n; ++qp) {
            const cxd coeff = c.at(pp, qp, p, q);
            if (coeff == cxd{0.0, 0.0}) continue;
            const auto cre_q = creation_on(cre_p->state, qp);
            if (!cre_q) continue;
            if (!basis->contains(cre_q->state)) continue;
            const double sign =
                double(ann_q->sign * ann_p->sign * cre_p->sign * cre_q->sign);
            m(static_cast<Eigen::Index>(basis->index_of(cre_q->state)),
              static_cast<Eigen::Index>(col)) += 0.5 * coeff * sign;
          }
        }
      }
    }
  }
  const bool herm = max_abs(m - m.adjoint()) <= 1e-12 * (1.0 + max_abs(m));
  return FockOperator(std::move(basis), std::move(m), herm);
}

TwoBodyCoeffs::TwoBodyCoeffs(std::size_t n_modes)
    : n_(n_modes), data_(n_modes * n_modes * n_modes * n_modes, cxd{0.0, 0.0}) {
  if (n_modes == 0) throw DomainError("TwoBodyCoeffs: empty mode set");
}

Eigen::SparseMatrix<cxd> ladder_matrix(const Mode& m, bool dagger, const Basis& basis) {
  if (!basis.mode_set().contains(m)) {
    throw DomainError("ladder_matrix: mode not in mode set");
  }
  const std::size_t k = basis.mode_set().index_of(m);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(basis.size() / 2 + 1);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto r = dagger ? creation_on(basis.state(col), k)
                          : annihilation_on(basis.state(col), k);
    if (!r || !basis.contains(r->state)) continue;
    trips.emplace_back(static_cast<int>(basis.index_of(r->state)), static_cast<int>(col),
                       cxd(double(r->sign), 0.0));
  }
  Eigen::SparseMatrix<cxd> out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

namespace {

// Applies one term to an occupation pattern; empty result if annihilated.
std::optional<LadderResult> apply_term_to_state(const LadderTerm& term, BasisState s) {
  int sign = 1;
  for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
    const auto r = it->dagger ? creation_on(s, it->mode_index)
                              : annihilation_on(s, it->mode_index);
    if (!r) return std::nullopt;
    s = r->state;
    sign *= r->sign;
  }
  return LadderResult{s, sign};
}

}  // namespace

FockOperator build_from_terms(const std::vector<LadderTerm>& terms,
                              std::shared_ptr<const Basis> basis) {
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const BasisState s = basis->state(col);
    for (const LadderTerm& term : terms) {
      const auto r = apply_term_to_state(term, s);
      if (!r || !basis->contains(r->state)) continue;
      m(static_cast<Eigen::Index>(basis->index_of(r->state)),
        static_cast<Eigen::Index>(col)) += term.coeff * double(r->sign);
    }
  }
  const bool herm = max_abs(m - m.adjoint()) <= 1e-12 * (1.0 + max_abs(m));
  return FockOperator(std::move(basis), std::move(m), herm);
}

FockVector apply_terms(const std::vector<LadderTerm>& terms, const FockVector& v) {
  const Basis& basis = v.basis();
  FockVector out(v.basis_ptr());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const cxd a = v.amplitudes()[static_cast<Eigen::Index>(i)];
    if (a == cxd{0.0, 0.0}) continue;
    const BasisState s = basis.state(i);
    for (const LadderTerm& term : terms) {
      const auto r = apply_term_to_state(term, s);
      if (!r || !basis.contains(r->state)) continue;
      out.amplitudes()[static_cast<Eigen::Index>(basis.index_of(r->state))] +=
          term.coeff * double(r->sign) * a;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evolution and expectation

Propagator::Propagator(const FockOperator& h) : basis_(h.basis_ptr()) {
  const double tol = 1e-12 * (1.0 + max_abs(h.matrix()));
  if (h.hermiticity_deviation() > tol) {
    throw DomainError("Propagator: generator is not hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error("Propagator: eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

FockVector Propagator::apply(double angle, const FockVector& v) const {
  require_same_basis(*basis_, v.basis(), "Propagator::apply");
  const Eigen::VectorXcd phases =
      (cxd{0.0, -1.0} * angle * eigenvalues_.array()).exp().matrix();
  return FockVector(basis_, eigenvectors_ *
                                (phases.array() *
                                 (eigenvectors_.adjoint() * v.amplitudes()).array())
                                    .matrix());
}

FockOperator Propagator::matrix(double angle) const {
  const Eigen::VectorXcd phases =
      (cxd{0.0, -1.0} * angle * eigenvalues_.array()).exp().matrix();
  return FockOperator(basis_,
                      eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint(), false);
}

FockVector evolve(const FockOperator& h, double angle, const FockVector& v) {
  return Propagator(h).apply(angle, v);
}

cxd expectation(const FockVector& v, const FockOperator& a) {
  if (std::abs(v.norm() - 1.0) > 1e-6) {
    throw DomainError("expectation: state is not normalized");
  }
  return matrix_element(v, a, v);
}

cxd matrix_element(const FockVector& u, const FockOperator& a, const FockVector& v) {
  require_same_basis(u.basis(), a.basis(), "matrix_element");
  require_same_basis(a.basis(), v.basis(), "matrix_element");
  return u.amplitudes().dot(a.matrix() * v.amplitudes());
}

}  // namespace eprbkit::fock
