// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eprbkit/eprb_model.hpp"

using namespace eprbkit;
using model::AnalyzerPair;
using model::Axis;
using model::cxd;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

AnalyzerPair zz() { return {{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}}; }

}  // namespace

TEST_CASE("pauli actions on spin basis states") {
  auto [cz, iz] = model::pauli_apply(Axis::z, 1);
  CHECK(cz == cxd(1.0, 0.0));
  CHECK(iz == 1);

  auto [cx, ix] = model::pauli_apply(Axis::x, 2);
  CHECK(cx == cxd(1.0, 0.0));
  CHECK(ix == 1);

  auto [cy, iy] = model::pauli_apply(Axis::y, 2);
  CHECK(cy == cxd(0.0, -1.0));
  CHECK(iy == 1);

  // pauli_dot columns reproduce the quoted actions.
  for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
    Eigen::Vector3d n = Eigen::Vector3d::Zero();
    n[axis == Axis::x ? 0 : axis == Axis::y ? 1 : 2] = 1.0;
    const Eigen::Matrix2cd m = model::pauli_dot(n);
    for (int i = 1; i <= 2; ++i) {
      const auto [coeff, out] = model::pauli_apply(axis, i);
      Eigen::Vector2cd col = Eigen::Vector2cd::Zero();
      col[out - 1] = coeff;
      CHECK((m.col(i - 1) - col).norm() < 1e-15);
    }
  }
}

TEST_CASE("entanglement generator g") {
  const Eigen::MatrixXcd g = model::build_g();
  CHECK(max_abs(g - g.adjoint()) < 1e-15);

  const Eigen::VectorXcd a = model::antisymmetric_state(1, 1, 2, 2);
  const Eigen::VectorXcd b = model::antisymmetric_state(1, 2, 2, 1);
  CHECK((g * b - cxd(0.0, 1.0) * a).norm() < 1e-15);   // g|[1]2[2]1> = i|[1]1[2]2>
  CHECK((g * a + cxd(0.0, 1.0) * b).norm() < 1e-15);

  CHECK((g * model::antisymmetric_state(1, 1, 2, 1)).norm() == 0.0);

  // g^2 acts as identity on span{a, b}.
  const Eigen::MatrixXcd g2 = g * g;
  CHECK((g2 * a - a).norm() < 1e-14);
  CHECK((g2 * b - b).norm() < 1e-14);
}

TEST_CASE("u_E(gamma): identity, paper actions, unitarity") {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  CHECK(max_abs(model::build_uE(0.0) - id) < 1e-14);

  const Eigen::MatrixXcd u = model::build_uE(kPi / 4.0);
  CHECK((u * model::antisymmetric_state(1, 1, 2, 2) - model::angular_momentum_state(0, 0))
            .norm() < 1e-14);
  CHECK((u * model::antisymmetric_state(1, 2, 2, 1) - model::angular_momentum_state(1, 0))
            .norm() < 1e-14);

  for (const double gamma : {0.17, 0.5, 1.2, kPi / 4.0}) {
    const Eigen::MatrixXcd ug = model::build_uE(gamma);
    CHECK(max_abs(Eigen::MatrixXcd(ug.adjoint() * ug) - id) < 1e-12);
  }
}

TEST_CASE("spin-correlation observable xi") {
  CHECK_THROWS_AS((void)model::build_xi({{0.0, 0.0, 2.0}, {0.0, 0.0, 1.0}}), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
    const Eigen::MatrixXcd xi = model::build_xi(pair);
    CHECK(max_abs(xi - xi.adjoint()) < 1e-14);

    const Eigen::VectorXcd psi = model::antisymmetric_state(1, 1, 2, 2);
    const cxd expect = psi.dot(xi * psi);
    CHECK(std::abs(expect.imag()) < 1e-14);
    CHECK(expect.real() ==
          doctest::Approx(-pair.n1.z() * pair.n2.z()).epsilon(1e-12));
  }
}

TEST_CASE("first-quantized correlation against the closed form") {
  CHECK(model::correlation_1q(0.0, zz()) == doctest::Approx(-1.0).epsilon(1e-12));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
    const double c = model::correlation_1q(kPi / 4.0, pair);
    CHECK(c == doctest::Approx(-pair.n1.dot(pair.n2)).epsilon(1e-12));
  }

  const AnalyzerPair orth{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  CHECK(std::abs(model::correlation_1q(kPi / 4.0, orth)) < 1e-12);
}

TEST_CASE("fock two-body tensor reproduces the first-quantized matrix elements") {
  auto basis = fock::enumerate_basis(fock::ModeSet::eprb4());
  const auto g_fock = fock::build_two_body(model::g_two_body_coeffs(basis->mode_set()), basis);
  const Eigen::MatrixXcd g_1q = model::build_g();

  // <<[r']i'[s']j'| G |[r]i[s]j>> must match <[r']i'[s']j'| g |[r]i[s]j>
  // across the one-particle-per-species family.
  const auto fock_pair_state = [&](int r, int i, int s, int j) {
    fock::FockVector v(basis);
    const auto c1 = fock::creation_on(
        0, basis->mode_set().index_of({std::int8_t(s), std::int8_t(j), -1}));
    const auto c2 =
        fock::creation_on(c1->state, basis->mode_set().index_of({std::int8_t(r), std::int8_t(i), -1}));
    if (!c2) return v;  // same mode twice
    v.amplitudes()[Eigen::Index(basis->index_of(c2->state))] = double(c1->sign * c2->sign);
    return v;
  };

  for (int rp = 1; rp <= 2; ++rp)
    for (int ip = 1; ip <= 2; ++ip)
      for (int sp = 1; sp <= 2; ++sp)
        for (int jp = 1; jp <= 2; ++jp)
          for (int r = 1; r <= 2; ++r)
            for (int i = 1; i <= 2; ++i)
              for (int s = 1; s <= 2; ++s)
                for (int j = 1; j <= 2; ++j) {
                  if (rp == sp || r == s) continue;  // one per species on both sides
                  const cxd fock_elt =
                      fock_pair_state(rp, ip, sp, jp).inner(g_fock.apply(fock_pair_state(r, i, s, j)));
                  const cxd first_quantized =
                      model::antisymmetric_state(rp, ip, sp, jp)
                          .dot(g_1q * model::antisymmetric_state(r, i, s, j));
                  CHECK(std::abs(fock_elt - first_quantized) < 1e-13);
                }
}

TEST_CASE("entangling generator: tensor route and term route agree") {
  auto basis = fock::enumerate_basis(fock::ModeSet::eprb4());
  const auto via_tensor =
      fock::build_two_body(model::g_two_body_coeffs(basis->mode_set()), basis);
  const auto via_terms = model::build_g_fock(basis);
  CHECK(max_abs(via_tensor.matrix() - via_terms.matrix()) < 1e-14);

  // G |[1]1[2]2>> = -i |[1]2[2]1>>, and G kills |[1]1[2]1>>.
  const auto& modes = basis->mode_set();
  const fock::BasisState ud = (fock::BasisState{1} << modes.index_of({1, 1, -1})) |
                              (fock::BasisState{1} << modes.index_of({2, 2, -1}));
  const fock::BasisState du = (fock::BasisState{1} << modes.index_of({1, 2, -1})) |
                              (fock::BasisState{1} << modes.index_of({2, 1, -1}));
  const fock::BasisState uu = (fock::BasisState{1} << modes.index_of({1, 1, -1})) |
                              (fock::BasisState{1} << modes.index_of({2, 1, -1}));
  const auto image = via_terms.apply(fock::FockVector::unit(basis, ud));
  CHECK((image - cxd(0.0, -1.0) * fock::FockVector::unit(basis, du)).norm() < 1e-13);
  CHECK(via_terms.apply(fock::FockVector::unit(basis, uu)).norm() < 1e-14);
}

TEST_CASE("spin-correlation observable: reduced kernel equals the full tensor") {
  auto basis = fock::enumerate_basis(fock::ModeSet::eprb4());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
    const auto reduced = model::build_xi_fock(basis, pair);
    const auto full =
        fock::build_two_body(model::xi_two_body_coeffs(basis->mode_set(), pair), basis);
    CHECK(max_abs(reduced.matrix() - full.matrix()) < 1e-13);
    CHECK(reduced.hermiticity_deviation() < 1e-13);
  }
}

TEST_CASE("fock correlation equals the first-quantized correlation") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 8; ++k) {
    const double gamma = kPi / 4.0 * k / 7.0;
    const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
    CHECK(std::abs(model::correlation_fock(gamma, pair) -
                   model::correlation_1q(gamma, pair)) < 1e-12);
  }

  // gamma = pi/8 with both analyzers along x: closed form gives -sin(pi/4).
  const AnalyzerPair xx{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK(model::correlation_fock(kPi / 8.0, xx) ==
        doctest::Approx(-std::sin(kPi / 4.0)).epsilon(1e-12));

  CHECK(model::correlation_fock(kPi / 4.0, zz()) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("singlet correlation depends on analyzers only through their dot product") {
  std::mt19937_64 rng(17);
  const double target_dot = 0.37;
  std::vector<double> values;
  for (int trial = 0; trial < 6; ++trial) {
    // Build a pair with the prescribed dot product from a random frame.
    const Eigen::Vector3d n1 = model::random_unit_vector(rng);
    Eigen::Vector3d perp = n1.cross(model::random_unit_vector(rng));
    perp.normalize();
    const Eigen::Vector3d n2 =
        target_dot * n1 + std::sqrt(1.0 - target_dot * target_dot) * perp;
    values.push_back(model::correlation_1q(kPi / 4.0, {n1, n2}));
  }
  for (const double v : values) CHECK(std::abs(v - values.front()) <= 1e-12);
}

TEST_CASE("antisymmetrized states: swap antisymmetry and vanishing at equal labels") {
  for (int r = 1; r <= 2; ++r)
    for (int i = 1; i <= 2; ++i)
      for (int s = 1; s <= 2; ++s)
        for (int j = 1; j <= 2; ++j) {
          const Eigen::VectorXcd direct = model::antisymmetric_state(r, i, s, j);
          const Eigen::VectorXcd swapped = model::antisymmetric_state(s, j, r, i);
          CHECK((direct + swapped).norm() < 1e-15);
          CHECK(model::is_physical_state(direct));
          if (r == s && i == j) CHECK(direct.norm() == 0.0);  // overcomplete family
        }
  CHECK_FALSE(model::is_physical_state(model::product_state(1, 1, 2, 2)));
  // The entangling rotation keeps physical states physical.
  CHECK(model::is_physical_state(model::build_uE(0.4) * model::antisymmetric_state(1, 1, 2, 2)));
}

TEST_CASE("correlations stay within the physical range") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 60; ++k) {
    const double gamma = kPi / 4.0 * (k % 12) / 11.0;
    const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
    const double c = model::correlation_1q(gamma, pair);
    CHECK(c >= -1.0 - 1e-9);
    CHECK(c <= 1.0 + 1e-9);
  }
}

TEST_CASE("angular momentum eigenstructure of the |J,Jz> states") {
  const Eigen::MatrixXcd jx = model::total_angular_momentum(Axis::x);
  const Eigen::MatrixXcd jy = model::total_angular_momentum(Axis::y);
  const Eigen::MatrixXcd jz = model::total_angular_momentum(Axis::z);
  const Eigen::MatrixXcd j2 = jx * jx + jy * jy + jz * jz;

  const std::vector<std::tuple<int, int>> labels = {{0, 0}, {1, -1}, {1, 0}, {1, 1}};
  for (const auto& [j, m] : labels) {
    const Eigen::VectorXcd v = model::angular_momentum_state(j, m);
    CHECK((j2 * v - double(j * (j + 1)) * v).norm() < 1e-12);
    CHECK((jz * v - double(m) * v).norm() < 1e-12);
  }
}

TEST_CASE("two-gamma estimator on noiseless closed-form data") {
  std::mt19937_64 rng(23);
  const auto make_samples = [&](double gamma, std::size_t count) {
    std::vector<model::CorrelationSample> samples;
    for (std::size_t k = 0; k < count; ++k) {
      const AnalyzerPair pair{model::random_unit_vector(rng), model::random_unit_vector(rng)};
      samples.push_back({pair, model::correlation_closed_form(gamma, pair)});
    }
    return samples;
  };

  const auto at_quarter = model::fit_two_gamma(make_samples(kPi / 4.0, 40));
  CHECK(at_quarter.s_hat == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(at_quarter.residual < 1e-10);

  CHECK(model::fit_two_gamma(make_samples(0.0, 25)).s_hat ==
        doctest::Approx(0.0).epsilon(1e-10));

  CHECK(model::fit_two_gamma(make_samples(kPi / 12.0, 30)).s_hat ==
        doctest::Approx(0.5).epsilon(1e-10));

  // Estimator consistency across the range.
  for (const double gamma : {0.1, 0.4, kPi / 8.0, 0.7}) {
    CHECK(std::abs(model::fit_two_gamma(make_samples(gamma, 30)).s_hat -
                   std::sin(2.0 * gamma)) < 1e-10);
  }
}

TEST_CASE("estimator error paths") {
  CHECK_THROWS_AS((void)model::fit_two_gamma({}), EstimationError);

  // All analyzers parallel along z makes n1z n2z identical to n1.n2.
  std::vector<model::CorrelationSample> degenerate;
  for (int k = 0; k < 10; ++k) degenerate.push_back({zz(), -1.0});
  CHECK_THROWS_AS((void)model::fit_two_gamma(degenerate), EstimationError);
}
