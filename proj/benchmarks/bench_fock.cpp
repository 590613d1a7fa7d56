// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eprbkit/eprb_model.hpp"
#include "eprbkit/fock.hpp"

using namespace eprbkit;
using fock::ModeSet;

namespace {

ModeSet lattice_modes(int sites) {
  return ModeSet::lattice(sites, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

void BM_EnumerateSectorBasis(benchmark::State& state) {
  const ModeSet modes = lattice_modes(static_cast<int>(state.range(0)));
  fock::SectorFilter sector;
  sector.per_species = {1, 1};
  for (auto _ : state) {
    auto basis = fock::enumerate_basis(modes, sector);
    benchmark::DoNotOptimize(basis->size());
  }
}
BENCHMARK(BM_EnumerateSectorBasis)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildEntanglingGenerator(benchmark::State& state) {
  const ModeSet modes = lattice_modes(static_cast<int>(state.range(0)));
  fock::SectorFilter sector;
  sector.per_species = {1, 1};
  auto basis = fock::enumerate_basis(modes, sector);
  const std::vector<double> weights(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) {
    auto op = model::build_g_fock(basis, weights);
    benchmark::DoNotOptimize(op.matrix().data());
  }
}
BENCHMARK(BM_BuildEntanglingGenerator)->Arg(4)->Arg(8);

void BM_PropagatorConstruct(benchmark::State& state) {
  const ModeSet modes = lattice_modes(static_cast<int>(state.range(0)));
  fock::SectorFilter sector;
  sector.per_species = {1, 1};
  auto basis = fock::enumerate_basis(modes, sector);
  const auto number =
      fock::build_one_body(fock::OneBodyCoeffs::identity(modes.size()), basis);
  for (auto _ : state) {
    fock::Propagator prop(number);
    benchmark::DoNotOptimize(&prop);
  }
}
BENCHMARK(BM_PropagatorConstruct)->Arg(4)->Arg(8);

void BM_PropagatorApply(benchmark::State& state) {
  const ModeSet modes = lattice_modes(static_cast<int>(state.range(0)));
  fock::SectorFilter sector;
  sector.per_species = {1, 1};
  auto basis = fock::enumerate_basis(modes, sector);
  const auto number =
      fock::build_one_body(fock::OneBodyCoeffs::identity(modes.size()), basis);
  const fock::Propagator prop(number);
  fock::FockVector v(basis);
  v.amplitudes().setConstant(fock::cxd(1.0, 0.0));
  v = v.normalized();
  for (auto _ : state) {
    auto evolved = prop.apply(0.37, v);
    benchmark::DoNotOptimize(evolved.amplitudes().data());
  }
}
BENCHMARK(BM_PropagatorApply)->Arg(4)->Arg(8);

void BM_CorrelationFock(benchmark::State& state) {
  const model::AnalyzerPair pair{Eigen::Vector3d{0.3, -0.5, 0.81}.normalized(),
                                 Eigen::Vector3d{-0.7, 0.2, 0.4}.normalized()};
  double gamma = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model::correlation_fock(gamma, pair));
    gamma += 1e-6;
  }
}
BENCHMARK(BM_CorrelationFock);

}  // namespace

BENCHMARK_MAIN();
