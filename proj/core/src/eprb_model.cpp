// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/eprb_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace eprbkit::model {

namespace {

using fock::LadderOp;
using fock::LadderTerm;
using fock::Mode;
using fock::ModeSet;

int check_spin_index(int i) {
  if (i != 1 && i != 2) throw DomainError("spin index must be 1 or 2");
  return i;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Matrix2cd species_projector(int species) {
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
  p(species - 1, species - 1) = 1.0;
  return p;
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

/// Sorted distinct site labels among modes matching the species filter.
std::vector<int> sites_of(const ModeSet& modes, std::optional<int> species = {}) {
  std::set<int> sites;
  for (const Mode& m : modes.modes()) {
    if (species && m.species != *species) continue;
    sites.insert(m.site);
  }
  return {sites.begin(), sites.end()};
}

std::optional<std::size_t> find_mode(const ModeSet& modes, int species, int spin, int site) {
  const Mode m{static_cast<std::int8_t>(species), static_cast<std::int8_t>(spin), site};
  if (!modes.contains(m)) return std::nullopt;
  return modes.index_of(m);
}

}  // namespace

PauliAction pauli_apply(Axis axis, int spin_index) {
  check_spin_index(spin_index);
  const double alpha = fock::spin_sign(spin_index);
  switch (axis) {
    case Axis::x:
      return {cxd(1.0, 0.0), fock::complement(spin_index)};
    case Axis::y:
      return {cxd(0.0, alpha), fock::complement(spin_index)};
    case Axis::z:
      return {cxd(alpha, 0.0), spin_index};
  }
  throw DomainError("pauli_apply: invalid axis");
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
  Eigen::Matrix2cd m;
  m << cxd(n.z(), 0.0), cxd(n.x(), -n.y()), cxd(n.x(), n.y()), cxd(-n.z(), 0.0);
  return m;
}

// ---------------------------------------------------------------------------
// First-quantized model

Eigen::VectorXcd product_state(int r, int i, int s, int j) {
  check_spin_index(i);
  check_spin_index(j);
  if ((r != 1 && r != 2) || (s != 1 && s != 2)) {
    throw DomainError("product_state: species index must be 1 or 2");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(kTwoParticleDim);
  const int idx = ((r - 1) * 2 + (i - 1)) * 4 + (s - 1) * 2 + (j - 1);
  v[idx] = 1.0;
  return v;
}

Eigen::VectorXcd antisymmetric_state(int r, int i, int s, int j) {
  return (product_state(r, i, s, j) - product_state(s, j, r, i)) / std::sqrt(2.0);
}

Eigen::VectorXcd angular_momentum_state(int j, int jz) {
  if (j == 1 && jz == 1) return antisymmetric_state(1, 1, 2, 1);
  if (j == 1 && jz == -1) return antisymmetric_state(1, 2, 2, 2);
  if (j == 1 && jz == 0) {
    return (antisymmetric_state(1, 1, 2, 2) + antisymmetric_state(1, 2, 2, 1)) /
           std::sqrt(2.0);
  }
  if (j == 0 && jz == 0) {
    return (antisymmetric_state(1, 1, 2, 2) - antisymmetric_state(1, 2, 2, 1)) /
           std::sqrt(2.0);
  }
  throw DomainError("angular_momentum_state: valid (J,Jz) are (0,0), (1,0), (1,+-1)");
}

bool is_physical_state(const Eigen::VectorXcd& v, double tol) {
  if (v.size() != kTwoParticleDim) {
    throw DomainError("is_physical_state: expected a 16-component two-particle vector");
  }
  const auto idx = [](int r, int i, int s, int j) {
    return ((r - 1) * 2 + (i - 1)) * 4 + (s - 1) * 2 + (j - 1);
  };
  for (int r = 1; r <= 2; ++r)
    for (int i = 1; i <= 2; ++i)
      for (int s = 1; s <= 2; ++s)
        for (int j = 1; j <= 2; ++j) {
          if (std::abs(v[idx(r, i, s, j)] + v[idx(s, j, r, i)]) > tol) return false;
        }
  return true;
}

Eigen::MatrixXcd species_spin_operator(int species, const Eigen::Vector3d& n) {
  const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd ns = pauli_dot(n);
  const Eigen::Matrix2cd proj = species_projector(species);
  // Slot layout: (species 1) x (spin 1) x (species 2) x (spin 2).
  return kron(kron(kron(proj, ns), eye), eye) + kron(kron(kron(eye, eye), proj), ns);
}

Eigen::MatrixXcd total_angular_momentum(Axis axis) {
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  n[axis == Axis::x ? 0 : axis == Axis::y ? 1 : 2] = 1.0;
  const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd ns = pauli_dot(n);
  return 0.5 * (kron(kron(kron(eye, ns), eye), eye) + kron(kron(kron(eye, eye), eye), ns));
}

Eigen::MatrixXcd build_g() {
  const Eigen::VectorXcd a = antisymmetric_state(1, 1, 2, 2);
  const Eigen::VectorXcd b = antisymmetric_state(1, 2, 2, 1);
  return cxd(0.0, 1.0) * (a * b.adjoint() - b * a.adjoint());
}

Eigen::MatrixXcd build_uE(double gamma) {
  const Eigen::MatrixXcd g = build_g();
  const Eigen::VectorXcd a = antisymmetric_state(1, 1, 2, 2);
  const Eigen::VectorXcd b = antisymmetric_state(1, 2, 2, 1);
  const Eigen::MatrixXcd i2 = a * a.adjoint() + b * b.adjoint();
  const Eigen::MatrixXcd closed = Eigen::MatrixXcd::Identity(kTwoParticleDim, kTwoParticleDim)
                                  - i2 + std::cos(gamma) * i2 - cxd(0.0, std::sin(gamma)) * g;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g);
  const Eigen::VectorXcd phases =
      (cxd(0.0, -gamma) * solver.eigenvalues().array().cast<cxd>()).exp().matrix();
  const Eigen::MatrixXcd expm =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();

  if ((expm - closed).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error("build_uE: exponential and closed form disagree beyond 1e-12");
  }
  return closed;
}

Eigen::MatrixXcd build_xi(const AnalyzerPair& analyzers) {
  require_unit(analyzers);
  return species_spin_operator(1, analyzers.n1) * species_spin_operator(2, analyzers.n2);
}

double correlation_closed_form(double gamma, const AnalyzerPair& analyzers) {
  const double z = analyzers.n1.z() * analyzers.n2.z();
  const double dot = analyzers.n1.dot(analyzers.n2);
  const double s = std::sin(2.0 * gamma);
  return -(1.0 - s) * z - s * dot;
}

double correlation_1q(double gamma, const AnalyzerPair& analyzers) {
  const Eigen::MatrixXcd u = build_uE(gamma);
  const Eigen::MatrixXcd xi = build_xi(analyzers);
  const Eigen::VectorXcd psi = u * antisymmetric_state(1, 1, 2, 2);
  const cxd val = psi.dot(xi * psi);
  const double closed = correlation_closed_form(gamma, analyzers);
  if (std::abs(val.imag()) > 1e-12 || std::abs(val.real() - closed) > 1e-12) {
    throw Error("correlation_1q: matrix sandwich and closed form disagree beyond 1e-12");
  }
  return val.real();
}

// ---------------------------------------------------------------------------
// Fock-space model

cxd g_component(int rp, int ip, int sp, int jp, int r, int i, int s, int j) {
  const double t1p = delta(rp, 1) * delta(ip, 1) * delta(sp, 2) * delta(jp, 2) -
                     delta(rp, 2) * delta(ip, 2) * delta(sp, 1) * delta(jp, 1);
  const double t1 = delta(r, 1) * delta(i, 2) * delta(s, 2) * delta(j, 1) -
                    delta(r, 2) * delta(i, 1) * delta(s, 1) * delta(j, 2);
  const double t2p = delta(rp, 1) * delta(ip, 2) * delta(sp, 2) * delta(jp, 1) -
                     delta(rp, 2) * delta(ip, 1) * delta(sp, 1) * delta(jp, 2);
  const double t2 = delta(r, 1) * delta(i, 1) * delta(s, 2) * delta(j, 2) -
                    delta(r, 2) * delta(i, 2) * delta(s, 1) * delta(j, 1);
  return cxd(0.0, 0.5) * (t1p * t1 - t2p * t2);
}

cxd xi_tilde(int i_prime, int j_prime, int i, int j, const AnalyzerPair& a) {
  const double ai = fock::spin_sign(i);
  const double aj = fock::spin_sign(j);
  const cxd f1 = cxd(a.n1.x(), a.n1.y() * ai) * delta(i_prime, fock::complement(i)) +
                 cxd(a.n1.z() * ai, 0.0) * delta(i_prime, i);
  const cxd f2 = cxd(a.n2.x(), a.n2.y() * aj) * delta(j_prime, fock::complement(j)) +
                 cxd(a.n2.z() * aj, 0.0) * delta(j_prime, j);
  return f1 * f2;
}

namespace {

void require_single_site(const ModeSet& modes, const char* what) {
  const auto sites = sites_of(modes);
  if (modes.size() != 4 || sites.size() != 1) {
    throw DomainError(std::string(what) + ": expects the four-mode single-site model");
  }
}

}  // namespace

fock::TwoBodyCoeffs g_two_body_coeffs(const ModeSet& modes) {
  require_single_site(modes, "g_two_body_coeffs");
  const int site = modes.mode(0).site;
  fock::TwoBodyCoeffs c(modes.size());
  for (int rp = 1; rp <= 2; ++rp)
    for (int ip = 1; ip <= 2; ++ip)
      for (int sp = 1; sp <= 2; ++sp)
        for (int jp = 1; jp <= 2; ++jp)
          for (int r = 1; r <= 2; ++r)
            for (int i = 1; i <= 2; ++i)
              for (int s = 1; s <= 2; ++s)
                for (int j = 1; j <= 2; ++j) {
                  const cxd val = g_component(rp, ip, sp, jp, r, i, s, j);
                  if (val == cxd{0.0, 0.0}) continue;
                  c.at(*find_mode(modes, rp, ip, site), *find_mode(modes, sp, jp, site),
                       *find_mode(modes, r, i, site), *find_mode(modes, s, j, site)) = val;
                }
  return c;
}

fock::TwoBodyCoeffs xi_two_body_coeffs(const ModeSet& modes, const AnalyzerPair& a) {
  require_unit(a);
  require_single_site(modes, "xi_two_body_coeffs");
  const int site = modes.mode(0).site;
  const Eigen::Matrix2cd s1 = pauli_dot(a.n1);
  const Eigen::Matrix2cd s2 = pauli_dot(a.n2);
  fock::TwoBodyCoeffs c(modes.size());
  for (int rp = 1; rp <= 2; ++rp)
    for (int ip = 1; ip <= 2; ++ip)
      for (int sp = 1; sp <= 2; ++sp)
        for (int jp = 1; jp <= 2; ++jp)
          for (int r = 1; r <= 2; ++r)
            for (int i = 1; i <= 2; ++i)
              for (int s = 1; s <= 2; ++s)
                for (int j = 1; j <= 2; ++j) {
                  // Species structure of the first-quantized observable:
                  // species (1,2) sees (n1, n2), species (2,1) sees (n2, n1).
                  const cxd val =
                      delta(rp, 1) * delta(sp, 2) * delta(r, 1) * delta(s, 2) *
                          s1(ip - 1, i - 1) * s2(jp - 1, j - 1) +
                      delta(rp, 2) * delta(sp, 1) * delta(r, 2) * delta(s, 1) *
                          s2(ip - 1, i - 1) * s1(jp - 1, j - 1);
                  if (val == cxd{0.0, 0.0}) continue;
                  c.at(*find_mode(modes, rp, ip, site), *find_mode(modes, sp, jp, site),
                       *find_mode(modes, r, i, site), *find_mode(modes, s, j, site)) = val;
                }
  return c;
}

std::vector<LadderTerm> entangling_terms(const ModeSet& modes,
                                         const std::vector<double>& site_weights) {
  const auto sites = sites_of(modes);
  if (site_weights.size() != sites.size()) {
    throw DomainError("entangling_terms: one weight per site required");
  }
  std::vector<LadderTerm> terms;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const int site = sites[k];
    const double w = site_weights[k];
    if (w == 0.0) continue;
    for (int rp = 1; rp <= 2; ++rp)
      for (int ip = 1; ip <= 2; ++ip)
        for (int sp = 1; sp <= 2; ++sp)
          for (int jp = 1; jp <= 2; ++jp)
            for (int r = 1; r <= 2; ++r)
              for (int i = 1; i <= 2; ++i)
                for (int s = 1; s <= 2; ++s)
                  for (int j = 1; j <= 2; ++j) {
                    const cxd g = g_component(rp, ip, sp, jp, r, i, s, j);
                    if (g == cxd{0.0, 0.0}) continue;
                    const auto c_sj = find_mode(modes, sp, jp, site);
                    const auto c_ri = find_mode(modes, rp, ip, site);
                    const auto a_ri = find_mode(modes, r, i, site);
                    const auto a_sj = find_mode(modes, s, j, site);
                    if (!c_sj || !c_ri || !a_ri || !a_sj) continue;
                    terms.push_back({0.5 * w * g,
                                     {{*c_sj, true}, {*c_ri, true}, {*a_ri, false}, {*a_sj, false}}});
                  }
  }
  return terms;
}

std::vector<LadderTerm> spin_correlation_terms(const ModeSet& modes, const AnalyzerPair& a) {
  require_unit(a);
  std::vector<LadderTerm> terms;
  for (const int x : sites_of(modes, 1)) {
    for (const int y : sites_of(modes, 2)) {
      for (int ip = 1; ip <= 2; ++ip)
        for (int jp = 1; jp <= 2; ++jp)
          for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
              const cxd val = xi_tilde(ip, jp, i, j, a);
              if (val == cxd{0.0, 0.0}) continue;
              const auto c2 = find_mode(modes, 2, jp, y);
              const auto c1 = find_mode(modes, 1, ip, x);
              const auto a1 = find_mode(modes, 1, i, x);
              const auto a2 = find_mode(modes, 2, j, y);
              if (!c2 || !c1 || !a1 || !a2) continue;
              terms.push_back({val, {{*c2, true}, {*c1, true}, {*a1, false}, {*a2, false}}});
            }
    }
  }
  return terms;
}

fock::FockOperator build_g_fock(std::shared_ptr<const fock::Basis> basis,
                                const std::vector<double>& site_weights) {
  return fock::build_from_terms(entangling_terms(basis->mode_set(), site_weights), basis);
}

fock::FockOperator build_xi_fock(std::shared_ptr<const fock::Basis> basis,
                                 const AnalyzerPair& analyzers) {
  return fock::build_from_terms(spin_correlation_terms(basis->mode_set(), analyzers), basis);
}

double correlation_fock(double gamma, const AnalyzerPair& analyzers) {
  const auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const auto& modes = basis->mode_set();
  const fock::BasisState initial =
      (fock::BasisState{1} << modes.index_of({1, 1, -1})) |
      (fock::BasisState{1} << modes.index_of({2, 2, -1}));
  const auto g = build_g_fock(basis);
  const auto evolved = fock::Propagator(g).apply(gamma, fock::FockVector::unit(basis, initial));
  const cxd val = fock::expectation(evolved, build_xi_fock(basis, analyzers));
  if (std::abs(val.imag()) > 1e-12) {
    throw Error("correlation_fock: expectation has a nonreal part beyond 1e-12");
  }
  return val.real();
}

// ---------------------------------------------------------------------------
// Estimator

FitResult fit_two_gamma(const std::vector<CorrelationSample>& samples) {
  if (samples.size() < 2) {
    throw EstimationError("fit_two_gamma: need at least two samples");
  }
  // C = -(1-s) z - s d  =>  C + z = s (z - d), one linear parameter.
  double sxx = 0.0, sxy = 0.0;
  for (const auto& sample : samples) {
    require_unit(sample.analyzers);
    const double z = sample.analyzers.n1.z() * sample.analyzers.n2.z();
    const double d = sample.analyzers.n1.dot(sample.analyzers.n2);
    const double x = z - d;
    const double y = sample.value + z;
    sxx += x * x;
    sxy += x * y;
  }
  if (sxx <= 1e-20 * double(samples.size())) {
    throw EstimationError(
        "fit_two_gamma: rank-deficient design, all samples have n1z*n2z = n1.n2 so the "
        "two terms of the functional form are indistinguishable");
  }
  const double s_hat = sxy / sxx;
  double rss = 0.0;
  for (const auto& sample : samples) {
    const double z = sample.analyzers.n1.z() * sample.analyzers.n2.z();
    const double d = sample.analyzers.n1.dot(sample.analyzers.n2);
    const double r = (sample.value + z) - s_hat * (z - d);
    rss += r * r;
  }
  FitResult out;
  out.s_hat = s_hat;
  out.residual = std::sqrt(rss);
  out.n_samples = samples.size();
  const double dof = std::max<double>(1.0, double(samples.size()) - 1.0);
  out.standard_error = std::sqrt(rss / dof / sxx);
  return out;
}

}  // namespace eprbkit::model
