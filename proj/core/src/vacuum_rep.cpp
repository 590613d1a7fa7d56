// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/vacuum_rep.hpp"

#include <cmath>

#include "eprbkit/eprb_model.hpp"

namespace eprbkit::vacrep {

namespace {

using fock::Basis;
using fock::FockOperator;
using fock::FockVector;
using fock::LadderTerm;
using fock::Mode;

void require_full_space(const Basis& basis, const char* what) {
  if (!basis.is_full()) {
    throw DomainError(std::string(what) +
                      ": W mixes particle-number sectors, use a full-space basis");
  }
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

PairAmplitude::PairAmplitude(fock::ModeSet modes, Eigen::VectorXcd psi11,
                             Eigen::VectorXcd psi22)
    : modes_(std::move(modes)),
      modes11_(modes_.indices_where(1, 1)),
      modes22_(modes_.indices_where(2, 2)),
      psi11_(std::move(psi11)),
      psi22_(std::move(psi22)) {
  if (static_cast<std::size_t>(psi11_.size()) != modes11_.size() ||
      static_cast<std::size_t>(psi22_.size()) != modes22_.size()) {
    throw DomainError("PairAmplitude: amplitude lengths must match the mode families");
  }
  if (std::abs(psi11_.norm() - 1.0) > 1e-12 || std::abs(psi22_.norm() - 1.0) > 1e-12) {
    throw DomainError("PairAmplitude: amplitudes must have unit norm within 1e-12");
  }
}

cxd PairAmplitude::amplitude_at(const Mode& m) const {
  const std::size_t idx = modes_.index_of(m);
  if (m.species == 1 && m.spin == 1) {
    for (std::size_t i = 0; i < modes11_.size(); ++i) {
      if (modes11_[i] == idx) return psi11_[static_cast<Eigen::Index>(i)];
    }
  }
  if (m.species == 2 && m.spin == 2) {
    for (std::size_t i = 0; i < modes22_.size(); ++i) {
      if (modes22_[i] == idx) return psi22_[static_cast<Eigen::Index>(i)];
    }
  }
  return {0.0, 0.0};
}

bool PairAmplitude::in_support(const Mode& m) const {
  return std::abs(amplitude_at(m)) > kSupportThreshold;
}

std::vector<LadderTerm> w_terms(const PairAmplitude& pair) {
  std::vector<LadderTerm> terms;
  terms.reserve(2 * pair.modes11().size() * pair.modes22().size());
  for (std::size_t i = 0; i < pair.modes11().size(); ++i) {
    for (std::size_t j = 0; j < pair.modes22().size(); ++j) {
      const cxd w = pair.psi11()[static_cast<Eigen::Index>(i)] *
                    pair.psi22()[static_cast<Eigen::Index>(j)];
      const std::size_t k = pair.modes11()[i];
      const std::size_t l = pair.modes22()[j];
      // psi11 psi22 adag_k adag_l  -  (psi11 psi22)^* a_l a_k
      terms.push_back({w, {{k, true}, {l, true}}});
      terms.push_back({-std::conj(w), {{l, false}, {k, false}}});
    }
  }
  return terms;
}

FockOperator build_W(const PairAmplitude& pair, std::shared_ptr<const Basis> basis) {
  require_full_space(*basis, "build_W");
  if (!(pair.mode_set() == basis->mode_set())) {
    throw DomainError("build_W: pair amplitude and basis mode sets differ");
  }
  return fock::build_from_terms(w_terms(pair), std::move(basis));
}

FockOperator build_V(const PairAmplitude& pair, double theta,
                     std::shared_ptr<const Basis> basis) {
  const FockOperator w = build_W(pair, basis);
  // i W is hermitian, and exp(theta W) = exp(-i theta (iW)).
  const FockOperator h(basis, cxd(0.0, 1.0) * w.matrix(), true);
  return fock::Propagator(h).matrix(theta);
}

FockVector apply_W(const PairAmplitude& pair, const FockVector& v) {
  require_full_space(v.basis(), "apply_W");
  if (!(pair.mode_set() == v.basis().mode_set())) {
    throw DomainError("apply_W: pair amplitude and vector mode sets differ");
  }
  return fock::apply_terms(w_terms(pair), v);
}

FockVector apply_V(const PairAmplitude& pair, double theta, const FockVector& v) {
  require_full_space(v.basis(), "apply_V");
  // Taylor series of exp(theta W) on the vector; ||W|| <= 2 keeps the
  // series short.
  FockVector result = v;
  FockVector term = v;
  const double base = std::max(1.0, v.norm());
  for (int n = 1; n <= 200; ++n) {
    term = apply_W(pair, term);
    term *= cxd(theta / n, 0.0);
    result += term;
    if (term.norm() <= 1e-17 * base) return result;
  }
  throw Error("apply_V: Taylor series did not converge within 200 terms");
}

FockVector pair_state(const PairAmplitude& pair, std::shared_ptr<const Basis> basis) {
  require_full_space(*basis, "pair_state");
  std::vector<LadderTerm> creation;
  for (const LadderTerm& term : w_terms(pair)) {
    if (term.ops[0].dagger) creation.push_back(term);
  }
  return fock::apply_terms(creation, FockVector::vacuum(std::move(basis)));
}

FockOperator transform_operator(const FockOperator& v_op, const FockOperator& a) {
  const auto n = static_cast<Eigen::Index>(v_op.dim());
  const double unitarity =
      max_abs(v_op.matrix().adjoint() * v_op.matrix() - Eigen::MatrixXcd::Identity(n, n));
  if (unitarity > 1e-10) {
    throw DomainError("transform_operator: conjugating operator is not unitary");
  }
  return FockOperator(a.basis_ptr(), v_op.matrix().adjoint() * a.matrix() * v_op.matrix(),
                      a.hermitian_flag());
}

FockOperator commutator_phi_W(const PairAmplitude& pair, const Mode& m,
                              std::shared_ptr<const Basis> basis) {
  require_full_space(*basis, "commutator_phi_W");
  const cxd amp = pair.amplitude_at(m);
  std::vector<LadderTerm> terms;
  if (m.species == 1 && m.spin == 1) {
    // psi11(x) * smeared species-2 spin-down creation operator
    for (std::size_t j = 0; j < pair.modes22().size(); ++j) {
      terms.push_back(
          {amp * pair.psi22()[static_cast<Eigen::Index>(j)], {{pair.modes22()[j], true}}});
    }
  } else if (m.species == 2 && m.spin == 2) {
    for (std::size_t i = 0; i < pair.modes11().size(); ++i) {
      terms.push_back(
          {-amp * pair.psi11()[static_cast<Eigen::Index>(i)], {{pair.modes11()[i], true}}});
    }
  }
  return fock::build_from_terms(terms, std::move(basis));
}

VacuumRepReport locality_support_check(const PairAmplitude& pair,
                                       std::shared_ptr<const Basis> basis, double theta) {
  require_full_space(*basis, "locality_support_check");
  VacuumRepReport report;

  const FockOperator v = build_V(pair, theta, basis);

  // Rotation identity at the same theta.
  const FockVector vacuum = FockVector::vacuum(basis);
  const FockVector rotated = v.apply(vacuum);
  FockVector expected = pair_state(pair, basis);
  expected *= cxd(std::sin(theta), 0.0);
  expected += cxd(std::cos(theta), 0.0) * FockVector(vacuum);
  report.rotation_error = (rotated - expected).norm();

  // Matrix-element invariance of the z-z spin-correlation observable; the
  // vacuum representation itself is defined at theta = pi/2.
  const model::AnalyzerPair zz{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}};
  const FockOperator xi = model::build_xi_fock(basis, zz);
  const FockVector psi0 = pair_state(pair, basis);
  const cxd standard = fock::matrix_element(psi0, xi, psi0);
  const FockOperator v_full = build_V(pair, 1.5707963267948966, basis);
  const FockOperator xi_vfull = transform_operator(v_full, xi);
  const cxd vacuum_side = fock::matrix_element(vacuum, xi_vfull, vacuum);
  report.invariance_error = std::abs(vacuum_side - standard);

  for (const Mode& m : basis->mode_set().modes()) {
    const Eigen::MatrixXcd phi = Eigen::MatrixXcd(fock::ladder_matrix(m, false, *basis));
    const Eigen::MatrixXcd phi_v = v.matrix().adjoint() * phi * v.matrix();
    LocalityDeviation dev;
    dev.mode = m;
    dev.deviation = max_abs(phi_v - phi);
    dev.outside_support = !pair.in_support(m);
    if (dev.outside_support && dev.deviation > kLocalityTolerance) {
      report.locality_violations.push_back(dev);
    }
    report.mode_deviations.push_back(dev);
  }
  return report;
}

double bch_expansion_check(const PairAmplitude& pair, const Mode& m, int order,
                           std::shared_ptr<const Basis> basis) {
  if (order < 1) throw DomainError("bch_expansion_check: order must be >= 1");
  require_full_space(*basis, "bch_expansion_check");
  const double theta = 1.5707963267948966;

  const FockOperator v = build_V(pair, theta, basis);
  const FockOperator w = build_W(pair, basis);
  const Eigen::MatrixXcd phi = Eigen::MatrixXcd(fock::ladder_matrix(m, false, *basis));
  const Eigen::MatrixXcd exact = v.matrix().adjoint() * phi * v.matrix();

  Eigen::MatrixXcd partial = phi;
  Eigen::MatrixXcd nested = phi;
  double factor = 1.0;
  for (int n = 1; n <= order; ++n) {
    nested = nested * w.matrix() - w.matrix() * nested;
    factor *= theta / n;
    partial += factor * nested;
  }
  return max_abs(partial - exact);
}

}  // namespace eprbkit::vacrep
