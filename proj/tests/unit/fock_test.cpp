// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>
#include <random>

#include "eprbkit/eprb_model.hpp"
#include "eprbkit/fock.hpp"
#include "oracles.hpp"

using namespace eprbkit;
using fock::Basis;
using fock::BasisState;
using fock::cxd;
using fock::FockOperator;
using fock::FockVector;
using fock::Mode;
using fock::ModeSet;
using fock::SectorFilter;

namespace {

FockVector random_vector(const std::shared_ptr<const Basis>& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(basis->size());
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = cxd(gauss(rng), gauss(rng));
  return FockVector(basis, amps);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// J components over the four-mode model as one-body operators,
// zeta_(r'i'),(ri) = (1/2) delta_rr' <alpha_i'|sigma_axis|alpha_i>.
FockOperator angular_momentum(const std::shared_ptr<const Basis>& basis, char axis) {
  const ModeSet& modes = basis->mode_set();
  fock::OneBodyCoeffs c = fock::OneBodyCoeffs::zero(modes.size());
  for (int r = 1; r <= 2; ++r) {
    for (int i = 1; i <= 2; ++i) {
      const auto col = modes.index_of({std::int8_t(r), std::int8_t(i), -1});
      const double alpha = fock::spin_sign(i);
      if (axis == 'z') {
        c.c(Eigen::Index(col), Eigen::Index(col)) = 0.5 * alpha;
      } else {
        const auto row = modes.index_of({std::int8_t(r), std::int8_t(fock::complement(i)), -1});
        c.c(Eigen::Index(row), Eigen::Index(col)) =
            axis == 'x' ? cxd(0.5, 0.0) : cxd(0.0, 0.5 * alpha);
      }
    }
  }
  return fock::build_one_body(c, basis);
}

}  // namespace

TEST_CASE("basis enumeration counts and determinism") {
  const ModeSet eprb4 = ModeSet::eprb4();

  auto full = fock::enumerate_basis(eprb4);
  CHECK(full->size() == 16);

  SectorFilter two;
  two.total_particles = 2;
  auto pairs = fock::enumerate_basis(eprb4, two);
  CHECK(pairs->size() == 6);

  // 8 sites carrying the initially-occupied internal pair (species-1 up,
  // species-2 down): 16 modes, one particle per species.
  const ModeSet lattice16 = ModeSet::lattice(8, {{1, 1}, {2, 2}});
  CHECK(lattice16.size() == 16);
  SectorFilter one_per_species;
  one_per_species.per_species = {1, 1};
  auto sector = fock::enumerate_basis(lattice16, one_per_species);
  CHECK(sector->size() == 64);
  CHECK(sector->size() == oracles::brute_force_sector_count(lattice16, one_per_species));

  // Deterministic and duplicate-free, round-trips through index_of.
  auto again = fock::enumerate_basis(lattice16, one_per_species);
  CHECK(sector->states() == again->states());
  for (std::size_t i = 0; i < sector->size(); ++i) {
    CHECK(sector->index_of(sector->state(i)) == i);
  }
  for (std::size_t i = 1; i < sector->size(); ++i) {
    CHECK(sector->state(i - 1) < sector->state(i));
  }
}

TEST_CASE("sector exceeding the mode count is an empty-sector error") {
  SectorFilter sector;
  sector.total_particles = 5;
  CHECK_THROWS_AS((void)fock::enumerate_basis(ModeSet::eprb4(), sector),
                  EmptySectorError);
}

TEST_CASE("creation operators: nilpotency, antisymmetry, vacuum action") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const Mode m1{1, 1, -1}, m2{2, 1, -1};
  const FockVector vac = FockVector::vacuum(basis);

  const FockVector once = fock::apply_creation(m1, vac);
  CHECK(once.amplitude(BasisState{1} << basis->mode_set().index_of(m1)) == cxd(1.0, 0.0));
  CHECK(once.norm() == doctest::Approx(1.0));

  CHECK(fock::apply_creation(m1, once).norm() == 0.0);  // adag adag = 0, exactly

  const FockVector ab = fock::apply_creation(m1, fock::apply_creation(m2, vac));
  const FockVector ba = fock::apply_creation(m2, fock::apply_creation(m1, vac));
  CHECK((ab + ba).norm() == 0.0);
}

TEST_CASE("annihilation: vacuum, inverse of creation, adjointness") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const Mode m{1, 2, -1};
  const FockVector vac = FockVector::vacuum(basis);

  CHECK(fock::apply_annihilation(m, vac).norm() == 0.0);

  const FockVector roundtrip = fock::apply_annihilation(m, fock::apply_creation(m, vac));
  CHECK((roundtrip - vac).norm() == 0.0);

  // <u| a v> = <adag u | v> on random vectors, against brute-force inner products.
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const FockVector u = random_vector(basis, seed);
    const FockVector v = random_vector(basis, seed + 100);
    const cxd lhs = u.inner(fock::apply_annihilation(m, v));
    const cxd rhs = fock::apply_creation(m, u).inner(v);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  const Mode absent{1, 1, 7};
  CHECK_THROWS_AS((void)fock::apply_annihilation(absent, vac), DomainError);
}

TEST_CASE("ladder matrices match the dense Jordan-Wigner oracle") {
  for (const ModeSet& modes :
       {ModeSet::eprb4(), ModeSet::lattice(3, {{1, 1}, {2, 2}})}) {
    auto basis = fock::enumerate_basis(modes);
    for (std::size_t k = 0; k < modes.size(); ++k) {
      const Eigen::MatrixXcd ann =
          Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k), false, *basis));
      const Eigen::MatrixXcd cre =
          Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k), true, *basis));
      CHECK(max_abs(ann - oracles::jw_annihilation(k, modes.size())) == 0.0);
      CHECK(max_abs(cre - oracles::jw_creation(k, modes.size())) == 0.0);
    }
  }
}

TEST_CASE("anticommutator identities on the full matrices") {
  const ModeSet modes = ModeSet::lattice(2, {{1, 1}, {1, 2}, {2, 2}});  // 6 modes
  auto basis = fock::enumerate_basis(modes);
  const auto dim = static_cast<Eigen::Index>(basis->size());
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t p = 0; p < modes.size(); ++p) {
    const Eigen::MatrixXcd ap = Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(p), false, *basis));
    for (std::size_t q = 0; q < modes.size(); ++q) {
      const Eigen::MatrixXcd aq =
          Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(q), false, *basis));
      const Eigen::MatrixXcd aqd = aq.adjoint();
      CHECK(max_abs(ap * aq + aq * ap) <= 1e-12);
      CHECK(max_abs(ap.adjoint() * aqd + aqd * ap.adjoint()) <= 1e-12);
      const Eigen::MatrixXcd mixed = ap * aqd + aqd * ap;
      CHECK(max_abs(mixed - (p == q ? eye : Eigen::MatrixXcd::Zero(dim, dim))) <= 1e-12);
    }
  }
}

TEST_CASE("one-body build: number operator and angular momentum") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const ModeSet& modes = basis->mode_set();

  const FockOperator number =
      fock::build_one_body(fock::OneBodyCoeffs::identity(modes.size()), basis);
  SectorFilter two;
  two.total_particles = 2;
  const auto pair_basis = fock::enumerate_basis(modes, two);
  for (const BasisState s : pair_basis->states()) {
    const FockVector v = FockVector::unit(basis, s);
    CHECK(std::abs(fock::expectation(v, number) - cxd(2.0, 0.0)) < 1e-12);
  }

  const FockOperator jz = angular_momentum(basis, 'z');
  const BasisState up_up = (BasisState{1} << modes.index_of({1, 1, -1})) |
                           (BasisState{1} << modes.index_of({2, 1, -1}));
  const BasisState dn_dn = (BasisState{1} << modes.index_of({1, 2, -1})) |
                           (BasisState{1} << modes.index_of({2, 2, -1}));
  const FockVector one_one = FockVector::unit(basis, up_up);    // |1,1>>
  const FockVector one_neg = FockVector::unit(basis, dn_dn);    // |1,-1>>
  CHECK((jz.apply(one_one) - one_one).norm() < 1e-12);
  CHECK((jz.apply(one_neg) + one_neg).norm() < 1e-12);

  const FockOperator jx = angular_momentum(basis, 'x');
  const FockOperator jy = angular_momentum(basis, 'y');
  const FockOperator j2 = jx * jx + jy * jy + jz * jz;

  const BasisState ud = (BasisState{1} << modes.index_of({1, 1, -1})) |
                        (BasisState{1} << modes.index_of({2, 2, -1}));
  const BasisState du = (BasisState{1} << modes.index_of({1, 2, -1})) |
                        (BasisState{1} << modes.index_of({2, 1, -1}));
  FockVector singlet = FockVector::unit(basis, ud);
  singlet -= FockVector::unit(basis, du);
  singlet *= cxd(1.0 / std::sqrt(2.0), 0.0);
  CHECK(j2.apply(singlet).norm() < 1e-12);                        // J.J |0,0>> = 0
  CHECK(std::abs(fock::expectation(singlet, j2)) < 1e-12);
  CHECK(std::abs(fock::expectation(one_one, j2) - cxd(2.0, 0.0)) < 1e-12);  // J(J+1) = 2

  fock::OneBodyCoeffs bad = fock::OneBodyCoeffs::zero(3);
  CHECK_THROWS_AS((void)fock::build_one_body(bad, basis), DomainError);
}

TEST_CASE("two-body build: zero coefficients and number conservation") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const std::size_t n = basis->mode_set().size();

  const FockOperator zero = fock::build_two_body(fock::TwoBodyCoeffs(n), basis);
  CHECK(max_abs(zero.matrix()) == 0.0);

  // Any two-body string conserves total particle number.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  fock::TwoBodyCoeffs c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t e = 0; e < n; ++e) c.at(a, b, d, e) = cxd(gauss(rng), gauss(rng));
  const FockOperator z2 = fock::build_two_body(c, basis);
  const FockOperator number =
      fock::build_one_body(fock::OneBodyCoeffs::identity(n), basis);
  CHECK(max_abs((z2 * number - number * z2).matrix()) <= 1e-12 * max_abs(z2.matrix()));
}

TEST_CASE("evolve: identity at zero angle, unitarity, hermiticity precondition") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());

  // Random hermitian generator.
  std::mt19937_64 rng(21);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd h(basis->size(), basis->size());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = cxd(gauss(rng), gauss(rng));
  h = (h + Eigen::MatrixXcd(h.adjoint())).eval();
  const FockOperator gen(basis, h, true);

  const FockVector v = random_vector(basis, 3).normalized();
  CHECK((fock::evolve(gen, 0.0, v) - v).norm() < 1e-13);

  const fock::Propagator prop(gen);
  const FockVector w = random_vector(basis, 4).normalized();
  for (const double angle : {0.3, 1.7, -2.2}) {
    const FockVector ev = prop.apply(angle, v);
    const FockVector ew = prop.apply(angle, w);
    CHECK(std::abs(ev.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ev.inner(ew) - v.inner(w)) < 1e-11);
  }

  Eigen::MatrixXcd nh = h;
  nh(0, 1) += cxd(0.0, 1e-3);
  CHECK_THROWS_AS(fock::Propagator(FockOperator(basis, nh, false)), DomainError);
}

TEST_CASE("mode sets reject duplicates and keep lexicographic order") {
  CHECK_THROWS_AS(ModeSet({{1, 1, -1}, {1, 1, -1}}), DomainError);
  CHECK_THROWS_AS(ModeSet({{3, 1, -1}}), DomainError);

  const ModeSet modes = ModeSet::lattice(2, {{2, 2}, {1, 1}});  // given out of order
  CHECK(modes.mode(0) == Mode{1, 1, 0});
  CHECK(modes.mode(1) == Mode{1, 1, 1});
  CHECK(modes.mode(2) == Mode{2, 2, 0});
}

TEST_CASE("entangling evolution rotates the pair state into the singlet") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const ModeSet& modes = basis->mode_set();
  const auto bit = [&](int r, int i) {
    return BasisState{1} << modes.index_of({std::int8_t(r), std::int8_t(i), -1});
  };
  const FockVector up_down = FockVector::unit(basis, bit(1, 1) | bit(2, 2));
  const FockVector down_up = FockVector::unit(basis, bit(1, 2) | bit(2, 1));
  FockVector singlet = up_down;
  singlet -= down_up;
  singlet *= cxd(1.0 / std::sqrt(2.0), 0.0);
  FockVector triplet0 = up_down;
  triplet0 += down_up;
  triplet0 *= cxd(1.0 / std::sqrt(2.0), 0.0);

  const auto g = model::build_g_fock(basis);
  const fock::Propagator prop(g);
  const double quarter = std::numbers::pi / 4.0;
  CHECK((prop.apply(quarter, up_down) - singlet).norm() < 1e-13);
  CHECK((prop.apply(quarter, down_up) - triplet0).norm() < 1e-13);
  CHECK((prop.apply(0.0, up_down) - up_down).norm() < 1e-13);
}

TEST_CASE("expectation values") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const std::size_t n = basis->mode_set().size();
  const FockOperator number =
      fock::build_one_body(fock::OneBodyCoeffs::identity(n), basis);

  CHECK(std::abs(fock::expectation(FockVector::vacuum(basis), number)) == 0.0);

  const FockVector v = random_vector(basis, 11).normalized();
  CHECK(std::abs(fock::expectation(v, FockOperator::identity(basis)) - cxd(1.0, 0.0)) <
        1e-12);

  CHECK_THROWS_AS((void)fock::expectation(cxd(2.0, 0.0) * v, number), DomainError);
}

TEST_CASE("ladder terms machinery agrees with explicit matrix assembly") {
  auto basis = fock::enumerate_basis(ModeSet::eprb4());
  const ModeSet& modes = basis->mode_set();
  const std::size_t k0 = modes.index_of({1, 1, -1});
  const std::size_t k1 = modes.index_of({2, 2, -1});

  const std::vector<fock::LadderTerm> terms = {
      {cxd(0.5, 0.25), {{k0, true}, {k1, false}}},
      {cxd(0.0, -1.0), {{k1, true}, {k0, true}}},
  };
  const FockOperator built = fock::build_from_terms(terms, basis);

  const Eigen::MatrixXcd expected =
      cxd(0.5, 0.25) * Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k0), true, *basis)) *
          Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k1), false, *basis)) +
      cxd(0.0, -1.0) * Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k1), true, *basis)) *
          Eigen::MatrixXcd(fock::ladder_matrix(modes.mode(k0), true, *basis));
  CHECK(max_abs(built.matrix() - expected) < 1e-14);

  const FockVector v = random_vector(basis, 5);
  CHECK((fock::apply_terms(terms, v) - built.apply(v)).norm() < 1e-12);
}
