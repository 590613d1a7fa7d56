// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "eprbkit/eprb_model.hpp"
#include "eprbkit/field.hpp"
#include "eprbkit/lattice.hpp"
#include "eprbkit/vacuum_rep.hpp"

namespace eprbkit::tool {

namespace {

constexpr double kPi = std::numbers::pi;

using fock::Basis;
using fock::BasisState;
using fock::cxd;
using fock::FockOperator;
using fock::FockVector;
using fock::Mode;
using fock::ModeSet;

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  void check(const std::string& name, double measured, double tolerance) {
    report_.checks.push_back({name, measured, tolerance, measured <= tolerance});
  }

 private:
  VerifyReport& report_;
};

// ---------------------------------------------------------------------------
// algebra: the Fock-engine invariants

void verify_algebra(Runner& run) {
  // Anticommutators on 4-, 8- and 12-mode full spaces, entrywise.
  const std::vector<std::pair<std::string, ModeSet>> spaces = {
      {"4 modes", ModeSet::eprb4()},
      {"8 modes", ModeSet::lattice(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})},
      {"12 modes", ModeSet::lattice(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})},
  };
  for (const auto& [label, modes] : spaces) {
    auto basis = fock::enumerate_basis(modes);
    using Sparse = Eigen::SparseMatrix<cxd>;
    std::vector<Sparse> ann;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      ann.push_back(fock::ladder_matrix(modes.mode(k), false, *basis));
    }
    Sparse eye(static_cast<Eigen::Index>(basis->size()),
               static_cast<Eigen::Index>(basis->size()));
    eye.setIdentity();
    double worst_aa = 0.0, worst_cc = 0.0, worst_mixed = 0.0;
    const auto sparse_max = [](const Sparse& s) {
      double m = 0.0;
      for (int k = 0; k < s.outerSize(); ++k) {
        for (Sparse::InnerIterator it(s, k); it; ++it) m = std::max(m, std::abs(it.value()));
      }
      return m;
    };
    for (std::size_t p = 0; p < modes.size(); ++p) {
      for (std::size_t q = p; q < modes.size(); ++q) {
        const Sparse aa = ann[p] * ann[q] + ann[q] * ann[p];
        worst_aa = std::max(worst_aa, sparse_max(aa));
        const Sparse cc = Sparse(ann[p].adjoint()) * Sparse(ann[q].adjoint()) +
                          Sparse(ann[q].adjoint()) * Sparse(ann[p].adjoint());
        worst_cc = std::max(worst_cc, sparse_max(cc));
        Sparse mixed = ann[p] * Sparse(ann[q].adjoint()) + Sparse(ann[q].adjoint()) * ann[p];
        if (p == q) mixed = Sparse(mixed - eye);
        worst_mixed = std::max(worst_mixed, sparse_max(mixed));
      }
    }
    run.check("algebra: {a,a} = 0 on " + label, worst_aa, 1e-12);
    run.check("algebra: {adag,adag} = 0 on " + label, worst_cc, 1e-12);
    run.check("algebra: {a,adag} = delta on " + label, worst_mixed, 1e-12);
  }

  // Creation nilpotency is exact on every basis state.
  auto basis4 = fock::enumerate_basis(ModeSet::eprb4());
  double worst_nilpotent = 0.0;
  for (std::size_t i = 0; i < basis4->size(); ++i) {
    for (const Mode& m : basis4->mode_set().modes()) {
      const FockVector v = FockVector::unit(basis4, basis4->state(i));
      worst_nilpotent =
          std::max(worst_nilpotent, fock::apply_creation(m, fock::apply_creation(m, v)).norm());
    }
  }
  run.check("algebra: adag adag = 0 exactly on all basis states", worst_nilpotent, 0.0);

  // Unitary evolution preserves norms and inner products.
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd h(basis4->size(), basis4->size());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = cxd(gauss(rng), gauss(rng));
  h = (h + Eigen::MatrixXcd(h.adjoint())).eval();
  const fock::Propagator prop(FockOperator(basis4, h, true));
  Eigen::VectorXcd a1(basis4->size()), a2(basis4->size());
  for (Eigen::Index i = 0; i < a1.size(); ++i) {
    a1[i] = cxd(gauss(rng), gauss(rng));
    a2[i] = cxd(gauss(rng), gauss(rng));
  }
  const FockVector v1 = FockVector(basis4, a1).normalized();
  const FockVector v2 = FockVector(basis4, a2).normalized();
  double worst_norm = 0.0, worst_inner = 0.0;
  for (const double angle : {0.2, 0.9, 2.7, -1.3}) {
    const FockVector e1 = prop.apply(angle, v1);
    const FockVector e2 = prop.apply(angle, v2);
    worst_norm = std::max(worst_norm, std::abs(e1.norm() - 1.0));
    worst_inner = std::max(worst_inner, std::abs(e1.inner(e2) - v1.inner(v2)));
  }
  run.check("algebra: evolve preserves norm", worst_norm, 1e-12);
  run.check("algebra: evolve preserves inner products", worst_inner, 1e-11);

  // Two-body operators commute with the total number operator.
  fock::TwoBodyCoeffs coeffs(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d) coeffs.at(a, b, c, d) = cxd(gauss(rng), gauss(rng));
  const FockOperator z2 = fock::build_two_body(coeffs, basis4);
  const FockOperator number = fock::build_one_body(fock::OneBodyCoeffs::identity(4), basis4);
  run.check("algebra: two-body operator commutes with particle number",
            max_abs((z2 * number - number * z2).matrix()) / std::max(1.0, max_abs(z2.matrix())),
            1e-12);

  // Basis enumeration round-trips.
  fock::SectorFilter one_per_species;
  one_per_species.per_species = {1, 1};
  auto sector = fock::enumerate_basis(ModeSet::lattice(8, {{1, 1}, {2, 2}}), one_per_species);
  double worst_roundtrip = 0.0;
  for (std::size_t i = 0; i < sector->size(); ++i) {
    worst_roundtrip += sector->index_of(sector->state(i)) == i ? 0.0 : 1.0;
  }
  run.check("algebra: basis enumeration round-trips", worst_roundtrip, 0.0);
}

// ---------------------------------------------------------------------------
// eprb: the two spin-correlation models

void verify_eprb(Runner& run) {
  const auto grid = model::analyzer_grid(25);
  const auto random_pairs = model::random_analyzers(25, 99);

  double worst_closed = 0.0, worst_equiv = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double gamma = kPi / 4.0 * k / 19.0;
    for (const auto& pairs : {grid, random_pairs}) {
      for (const auto& pair : pairs) {
        const double closed = model::correlation_closed_form(gamma, pair);
        const double m1q = model::correlation_1q(gamma, pair);
        const double mf = model::correlation_fock(gamma, pair);
        worst_closed = std::max(worst_closed, std::abs(m1q - closed));
        worst_equiv = std::max(worst_equiv, std::abs(mf - m1q));
      }
    }
  }
  run.check("eprb: first-quantized correlation matches the closed form", worst_closed, 1e-12);
  run.check("eprb: Fock correlation matches the first-quantized one", worst_equiv, 1e-12);

  double worst_unitary = 0.0;
  const Eigen::MatrixXcd id16 = Eigen::MatrixXcd::Identity(16, 16);
  for (const double gamma : {0.0, 0.3, kPi / 8.0, kPi / 4.0, 1.1}) {
    const Eigen::MatrixXcd u = model::build_uE(gamma);
    worst_unitary = std::max(worst_unitary, max_abs(u.adjoint() * u - id16));
  }
  run.check("eprb: u_E(gamma) unitary", worst_unitary, 1e-12);

  // Singlet isotropy: fixed n1.n2, varied frames.
  std::mt19937_64 rng(17);
  double worst_isotropy = 0.0;
  for (const double dot : {-0.8, 0.0, 0.37, 0.9}) {
    double first = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Vector3d n1 = model::random_unit_vector(rng);
      Eigen::Vector3d perp = n1.cross(model::random_unit_vector(rng));
      perp.normalize();
      const Eigen::Vector3d n2 = dot * n1 + std::sqrt(1.0 - dot * dot) * perp;
      const double c = model::correlation_1q(kPi / 4.0, {n1, n2});
      if (trial == 0) {
        first = c;
      } else {
        worst_isotropy = std::max(worst_isotropy, std::abs(c - first));
      }
    }
  }
  run.check("eprb: singlet correlation depends only on n1.n2", worst_isotropy, 1e-12);

  // |J,Jz> eigenstructure.
  const Eigen::MatrixXcd jx = model::total_angular_momentum(model::Axis::x);
  const Eigen::MatrixXcd jy = model::total_angular_momentum(model::Axis::y);
  const Eigen::MatrixXcd jz = model::total_angular_momentum(model::Axis::z);
  const Eigen::MatrixXcd j2 = jx * jx + jy * jy + jz * jz;
  double worst_j = 0.0;
  for (const auto& [j, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, -1}, {1, 0}, {1, 1}}) {
    const Eigen::VectorXcd v = model::angular_momentum_state(j, m);
    worst_j = std::max(worst_j, (j2 * v - double(j * (j + 1)) * v).norm());
    worst_j = std::max(worst_j, (jz * v - double(m) * v).norm());
  }
  run.check("eprb: |J,Jz> simultaneous eigenvectors of J.J and Jz", worst_j, 1e-12);

  // Estimator consistency on noiseless closed-form data.
  double worst_fit = 0.0;
  for (const double gamma : {0.0, kPi / 12.0, kPi / 8.0, 0.55, kPi / 4.0}) {
    std::vector<model::CorrelationSample> samples;
    for (const auto& pair : model::random_analyzers(40, 1234 + std::uint64_t(gamma * 1e6))) {
      samples.push_back({pair, model::correlation_closed_form(gamma, pair)});
    }
    const auto fit = model::fit_two_gamma(samples);
    worst_fit = std::max(worst_fit, std::abs(fit.s_hat - std::sin(2.0 * gamma)));
  }
  run.check("eprb: estimator recovers sin(2 gamma) on noiseless data", worst_fit, 1e-10);
}

// ---------------------------------------------------------------------------
// field: propagation and the entanglement integral

field::FieldScenario head_on() {
  field::FieldScenario s;
  s.packet1 = {{-1.0, 0.0, 0.0}, {0.5, 0.0, 0.0}, 4.0, 40.0};
  s.packet2 = {{1.0, 0.0, 0.0}, {-0.5, 0.0, 0.0}, 4.0, 40.0};
  s.coupling = field::UniformInSpace{field::TimeProfile::constant(0.3)};
  s.t0 = 0.0;
  s.t = 4.0;
  return s;
}

void verify_field(Runner& run) {
  // Propagator symmetries.
  const Eigen::Vector3d dx{0.4, -0.2, 0.9};
  const cxd g1 = field::greens_function(dx, 0.7, 1.9);
  run.check("field: G(-dx) = G(dx)",
            std::abs(field::greens_function(-dx, 0.7, 1.9) - g1), 1e-15);
  run.check("field: G(dx,-dt) = conj G(dx,dt)",
            std::abs(field::greens_function(dx, -0.7, 1.9) - std::conj(g1)), 1e-15);

  // Free norm conservation by quadrature.
  const field::Wavepacket wp{{0.2, -0.1, 0.4}, {0.3, 0.2, -0.1}, 3.0, 2.5};
  double worst_norm = 0.0;
  for (const double dt : {0.4, 1.7}) {
    double norm = 1.0;
    for (int axis = 0; axis < 3; ++axis) {
      const double a_t = field::width_param_at(wp, dt);
      const double c = field::center_at(wp, dt)[axis];
      const double sigma = 1.0 / std::sqrt(a_t);
      norm *= quad::integrate_adaptive(
                  [&](double x) {
                    return std::norm(field::propagate_gaussian_axis(
                        wp.width_param, wp.mass, wp.center[axis], wp.velocity[axis], x, dt));
                  },
                  c - 10.0 * sigma, c + 10.0 * sigma, 1e-10, 1e-10)
                  .value;
    }
    worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
  }
  run.check("field: free evolution conserves probability", worst_norm, 1e-6);

  // Peak density of the propagated packet.
  double worst_peak = 0.0;
  for (const double dt : {0.0, 0.8, 2.5}) {
    const double a_t = field::width_param_at(wp, dt);
    const double peak = std::norm(field::propagate_gaussian(wp, field::center_at(wp, dt), dt));
    worst_peak = std::max(worst_peak,
                          std::abs(peak - std::pow(a_t / kPi, 1.5)) / std::pow(a_t / kPi, 1.5));
  }
  run.check("field: propagated peak density matches (A/pi)^(3/2)", worst_peak, 1e-9);

  // Both L routes agree.
  const field::FieldScenario s = head_on();
  const double lg = field::entanglement_L_gaussian(s);
  const double lq = field::entanglement_L_quadrature(s);
  run.check("field: gaussian and quadrature L agree (relative)", std::abs(lg - lq) / lg, 1e-4);

  // Positivity for nonnegative couplings.
  run.check("field: L >= 0 for kappa >= 0", lg >= 0.0 && lq >= 0.0 ? 0.0 : 1.0, 0.0);

  // Translation covariance.
  field::FieldScenario shifted = s;
  const Eigen::Vector3d shift{0.31, -0.17, 0.23};
  shifted.packet1.center += shift;
  shifted.packet2.center += shift;
  run.check("field: L invariant under joint translation",
            std::abs(field::entanglement_L_gaussian(shifted) - lg), 1e-10);

  // Point-impulse closed form at coincident centers.
  field::FieldScenario pt = head_on();
  const Eigen::Vector3d meet = field::center_at(pt.packet1, 2.0);
  pt.coupling = field::PointImpulse{0.7, meet, 2.0};
  const double a2 = field::width_param_at(pt.packet1, 2.0);
  run.check("field: point-impulse L at coincident centers",
            std::abs(field::entanglement_L_point(pt).value -
                     2.0 * 0.7 * std::pow(a2 / kPi, 3.0)),
            1e-12);

  // Steepest descent within its validity regime.
  field::FieldScenario sd = head_on();
  sd.packet1.width_param = sd.packet2.width_param = 25.0;
  sd.packet1.mass = sd.packet2.mass = 5000.0;
  sd.coupling = field::UniformInSpace{field::TimeProfile::constant(0.02)};
  const auto sd_res = field::steepest_descent_L(sd);
  const double sd_ref = field::entanglement_L_gaussian(sd);
  run.check("field: steepest descent validity ratios", std::max(sd_res.validity.kappa_dot_ratio,
                                                                sd_res.validity.kappa_ddot_ratio),
            field::kSteepestDescentValidityThreshold);
  run.check("field: steepest descent vs quadrature (relative)",
            std::abs(sd_res.L_approx - sd_ref) / sd_ref, 0.05);

  // Lattice propagator group property and observable hermiticity/reality.
  const lattice::LatticeConfig config{8, 1.0, 1.0};
  const Eigen::MatrixXcd p1 = lattice::single_particle_propagator(config, 0.8);
  const Eigen::MatrixXcd p2 = lattice::single_particle_propagator(config, 1.3);
  const Eigen::MatrixXcd p12 = lattice::single_particle_propagator(config, 2.1);
  run.check("field: lattice propagator group property", max_abs(p1 * p2 - p12), 1e-12);

  lattice::LatticeScenario ls;
  ls.config = config;
  ls.packet1 = {2.0, 0.6, 1.0};
  ls.packet2 = {5.0, -0.6, 1.0};
  ls.epsilon = 0.05;
  ls.t = 3.0;
  ls.analyzers = {Eigen::Vector3d{0.3, -0.5, 0.81}.normalized(),
                  Eigen::Vector3d{-0.7, 0.2, 0.4}.normalized()};
  {
    auto basis = lattice::lattice_sector_basis(ls.config);
    const FockOperator xi = lattice::lattice_observable(ls, basis);
    run.check("field: lattice spin-correlation observable hermitian",
              xi.hermiticity_deviation(), 1e-12);

    FockOperator ham = lattice::lattice_free_hamiltonian(ls.config, basis);
    ham += cxd(ls.epsilon, 0.0) * lattice::lattice_interaction(ls, basis);
    const FockVector evolved =
        fock::Propagator(ham).apply(ls.t - ls.t0, lattice::lattice_initial_state(ls, basis));
    run.check("field: correlation outputs real",
              std::abs(fock::matrix_element(evolved, xi, evolved).imag()), 1e-10);
  }

  // Perturbation order: the residual of the first-order formula must
  // vanish at least quadratically (measured slope; structurally it is
  // cubic for this interaction, see the lattice tests).
  std::vector<double> log_eps, log_diff;
  for (const double eps : {3e-2, 1e-2, 3e-3}) {
    ls.epsilon = eps;
    const double diff = std::abs(lattice::lattice_exact_correlation(ls) -
                                 lattice::lattice_perturbative_correlation(ls));
    log_eps.push_back(std::log(eps));
    log_diff.push_back(std::log(diff));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_eps.size(); ++i) {
    sx += log_eps[i];
    sy += log_diff[i];
    sxx += log_eps[i] * log_eps[i];
    sxy += log_eps[i] * log_diff[i];
  }
  const double n = double(log_eps.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  run.check("field: perturbative residual vanishes at least as eps^2 (2 - slope)",
            2.0 - slope, 0.1);
}

// ---------------------------------------------------------------------------
// vacuum-rep

void verify_vacuum_rep(Runner& run) {
  // Four-mode model and a 4-site lattice carrying the occupied families.
  Eigen::VectorXcd one(1);
  one << 1.0;
  const vacrep::PairAmplitude pair4(ModeSet::eprb4(), one, one);

  const ModeSet lat_modes = ModeSet::lattice(4, {{1, 1}, {2, 2}});
  Eigen::VectorXcd psi11 = Eigen::VectorXcd::Zero(4);
  Eigen::VectorXcd psi22 = Eigen::VectorXcd::Zero(4);
  psi11[0] = std::sqrt(0.3);
  psi11[1] = cxd(0.0, 1.0) * std::sqrt(0.7);
  psi22[0] = std::sqrt(0.6);
  psi22[1] = -std::sqrt(0.4);
  const vacrep::PairAmplitude pair_lat(lat_modes, psi11, psi22);

  int which = 0;
  for (const auto& pair : {pair4, pair_lat}) {
    const std::string label = which++ == 0 ? " (4-mode model)" : " (4-site lattice)";
    auto basis = fock::enumerate_basis(pair.mode_set());
    const FockOperator w = vacrep::build_W(pair, basis);
    run.check("vacuum-rep: W skew-hermitian" + label,
              max_abs(w.matrix() + w.matrix().adjoint()), 1e-12);

    const FockVector vacuum = FockVector::vacuum(basis);
    const FockVector psi0 = vacrep::pair_state(pair, basis);

    double worst_power = 0.0;
    FockVector even = vacuum;
    for (int n = 0; n <= 3; ++n) {
      if (n > 0) {
        even = vacrep::apply_W(pair, vacrep::apply_W(pair, even));
      }
      const double parity = (n % 2 == 0) ? 1.0 : -1.0;
      worst_power =
          std::max(worst_power, (even - cxd(parity, 0.0) * FockVector(vacuum)).norm());
      worst_power = std::max(
          worst_power,
          (vacrep::apply_W(pair, even) - cxd(parity, 0.0) * FockVector(psi0)).norm());
    }
    run.check("vacuum-rep: W power identities on the vacuum" + label, worst_power, 1e-10);

    double worst_rotation = 0.0, worst_unitarity = 0.0;
    const auto dim = static_cast<Eigen::Index>(basis->size());
    for (const double theta : {0.0, kPi / 6.0, kPi / 4.0, kPi / 2.0}) {
      const FockOperator v = vacrep::build_V(pair, theta, basis);
      worst_unitarity =
          std::max(worst_unitarity, max_abs(v.matrix().adjoint() * v.matrix() -
                                            Eigen::MatrixXcd::Identity(dim, dim)));
      FockVector expected = psi0;
      expected *= cxd(std::sin(theta), 0.0);
      expected += cxd(std::cos(theta), 0.0) * FockVector(vacuum);
      worst_rotation = std::max(worst_rotation, (v.apply(vacuum) - expected).norm());
    }
    run.check("vacuum-rep: V(theta) unitary" + label, worst_unitarity, 1e-12);
    run.check("vacuum-rep: vacuum rotation identity" + label, worst_rotation, 1e-12);

    // Algebra preservation and matrix-element invariance at theta = pi/2.
    const FockOperator v = vacrep::build_V(pair, kPi / 2.0, basis);
    double worst_algebra = 0.0;
    const auto& modes = pair.mode_set();
    std::vector<Eigen::MatrixXcd> transformed;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      const FockOperator phi(basis,
                             Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k), false, *basis)));
      transformed.push_back(vacrep::transform_operator(v, phi).matrix());
    }
    for (std::size_t p = 0; p < modes.size(); ++p) {
      for (std::size_t q = p; q < modes.size(); ++q) {
        worst_algebra = std::max(
            worst_algebra, max_abs(transformed[p] * transformed[q] +
                                   transformed[q] * transformed[p]));
        Eigen::MatrixXcd mixed = transformed[p] * transformed[q].adjoint() +
                                 transformed[q].adjoint() * transformed[p];
        if (p == q) mixed -= Eigen::MatrixXcd::Identity(dim, dim);
        worst_algebra = std::max(worst_algebra, max_abs(mixed));
      }
    }
    run.check("vacuum-rep: transformed operators keep the anticommutators" + label,
              worst_algebra, 1e-12);

    double worst_invariance = 0.0;
    for (const auto& analyzers :
         {model::AnalyzerPair{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}},
          model::AnalyzerPair{Eigen::Vector3d{0.6, 0.0, 0.8}.normalized(),
                              Eigen::Vector3d{-0.3, 0.4, 0.866}.normalized()}}) {
      const FockOperator xi = model::build_xi_fock(basis, analyzers);
      const cxd standard = fock::matrix_element(psi0, xi, psi0);
      const cxd vac_side =
          fock::matrix_element(vacuum, vacrep::transform_operator(v, xi), vacuum);
      worst_invariance = std::max(worst_invariance, std::abs(vac_side - standard));
    }
    run.check("vacuum-rep: matrix elements invariant under the transformation" + label,
              worst_invariance, 1e-10);

    const auto report = vacrep::locality_support_check(pair, basis);
    double worst_locality = 0.0;
    for (const auto& dev : report.mode_deviations) {
      if (dev.outside_support) worst_locality = std::max(worst_locality, dev.deviation);
    }
    run.check("vacuum-rep: transformed operators unchanged outside the support" + label,
              worst_locality, vacrep::kLocalityTolerance);

    // BCH series convergence for one supported mode.
    Mode supported = modes.mode(0);
    for (const Mode& m : modes.modes()) {
      if (pair.in_support(m)) {
        supported = m;
        break;
      }
    }
    run.check("vacuum-rep: nested-commutator series at order 20" + label,
              vacrep::bch_expansion_check(pair, supported, 20, basis), 1e-9);
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void VerifyReport::print(std::ostream& out) const {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    char measured[40], tol[40];
    std::snprintf(measured, sizeof(measured), "%.3e", c.measured);
    std::snprintf(tol, sizeof(tol), "%.3e", c.tolerance);
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  (measured " << measured
        << ", tolerance " << tol << ")\n";
    if (c.pass) ++passed;
  }
  out << passed << "/" << checks.size() << " checks passed\n";
}

VerifyReport run_verify_suite(const std::string& suite) {
  VerifyReport report;
  Runner run(report);
  if (suite == "algebra") {
    verify_algebra(run);
  } else if (suite == "eprb") {
    verify_eprb(run);
  } else if (suite == "field") {
    verify_field(run);
  } else if (suite == "vacuum-rep") {
    verify_vacuum_rep(run);
  } else if (suite == "all") {
    verify_algebra(run);
    verify_eprb(run);
    verify_field(run);
    verify_vacuum_rep(run);
  } else {
    throw DomainError("unknown verify suite '" + suite +
                      "' (expected algebra, eprb, field, vacuum-rep or all)");
  }
  return report;
}

}  // namespace eprbkit::tool
