// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eprbkit/field.hpp"
#include "eprbkit/lattice.hpp"

using namespace eprbkit;

namespace {

field::FieldScenario head_on() {
  field::FieldScenario s;
  s.packet1 = {{-1.0, 0.0, 0.0}, {0.5, 0.0, 0.0}, 4.0, 40.0};
  s.packet2 = {{1.0, 0.0, 0.0}, {-0.5, 0.0, 0.0}, 4.0, 40.0};
  s.coupling = field::UniformInSpace{field::TimeProfile::constant(0.3)};
  s.t0 = 0.0;
  s.t = 4.0;
  return s;
}

void BM_EntanglementGaussian(benchmark::State& state) {
  const auto s = head_on();
  for (auto _ : state) {
    benchmark::DoNotOptimize(field::entanglement_L_gaussian(s));
  }
}
BENCHMARK(BM_EntanglementGaussian);

void BM_EntanglementQuadrature(benchmark::State& state) {
  const auto s = head_on();
  for (auto _ : state) {
    benchmark::DoNotOptimize(field::entanglement_L_quadrature(s));
  }
}
BENCHMARK(BM_EntanglementQuadrature);

void BM_SteepestDescent(benchmark::State& state) {
  auto s = head_on();
  s.packet1.width_param = s.packet2.width_param = 25.0;
  s.packet1.mass = s.packet2.mass = 5000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(field::steepest_descent_L(s).L_approx);
  }
}
BENCHMARK(BM_SteepestDescent);

void BM_LatticeExactCorrelation(benchmark::State& state) {
  lattice::LatticeScenario s;
  s.config = {static_cast<int>(state.range(0)), 1.0, 1.0};
  s.packet1 = {2.0, 0.6, 1.0};
  s.packet2 = {double(state.range(0)) - 3.0, -0.6, 1.0};
  s.epsilon = 0.01;
  s.t = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice::lattice_exact_correlation(s));
  }
}
BENCHMARK(BM_LatticeExactCorrelation)->Arg(6)->Arg(8)->Arg(12);

void BM_LatticePerturbativeL(benchmark::State& state) {
  lattice::LatticeScenario s;
  s.config = {8, 1.0, 1.0};
  s.packet1 = {2.0, 0.6, 1.0};
  s.packet2 = {5.0, -0.6, 1.0};
  s.t = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice::lattice_entanglement_L(s));
  }
}
BENCHMARK(BM_LatticePerturbativeL);

}  // namespace

BENCHMARK_MAIN();
