// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/basis.hpp"

#include <algorithm>
#include <bit>

namespace eprbkit::fock {

namespace {

constexpr std::size_t kMaxFullSpaceModes = 24;
constexpr std::size_t kMaxSectorStates = std::size_t{1} << 24;

/// C(n, k) saturating at kMaxSectorStates + 1.
std::size_t capped_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (result > kMaxSectorStates) return kMaxSectorStates + 1;
    result = result * (n - i) / (i + 1);
  }
  return std::min(result, kMaxSectorStates + 1);
}

/// All masks with `count` bits chosen from `positions`, appended to `out`.
void combinations(const std::vector<std::size_t>& positions, int count, std::size_t first,
                  BasisState acc, std::vector<BasisState>& out) {
  if (count == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = first; i + static_cast<std::size_t>(count) <= positions.size(); ++i) {
    combinations(positions, count - 1, i + 1, acc | (BasisState{1} << positions[i]), out);
  }
}

}  // namespace

Basis::Basis(ModeSet modes, SectorFilter sector)
    : modes_(std::move(modes)), sector_(sector) {
  const std::size_t n = modes_.size();
  if (n == 0) throw DomainError("Basis: empty mode set");

  if (sector_.total_particles &&
      (*sector_.total_particles < 0 || *sector_.total_particles > static_cast<int>(n))) {
    throw EmptySectorError("Basis: sector occupancy exceeds mode count");
  }
  const auto species1 = modes_.indices_where(1);
  const auto species2 = modes_.indices_where(2);
  if (sector_.per_species) {
    const auto [want1, want2] = *sector_.per_species;
    if (want1 < 0 || want2 < 0 || static_cast<std::size_t>(want1) > species1.size() ||
        static_cast<std::size_t>(want2) > species2.size()) {
      throw EmptySectorError("Basis: per-species occupancy exceeds available modes");
    }
    if (sector_.total_particles && *sector_.total_particles != want1 + want2) {
      throw EmptySectorError("Basis: total and per-species occupancies disagree");
    }
  }

  if (sector_.per_species) {
    const auto [want1, want2] = *sector_.per_species;
    const std::size_t count = capped_binomial(species1.size(), static_cast<std::size_t>(want1)) *
                              capped_binomial(species2.size(), static_cast<std::size_t>(want2));
    if (count > kMaxSectorStates) {
      throw ResourceError("Basis: sector dimension over budget");
    }
    std::vector<BasisState> masks1, masks2;
    combinations(species1, want1, 0, 0, masks1);
    combinations(species2, want2, 0, 0, masks2);
    states_.reserve(masks1.size() * masks2.size());
    for (const BasisState m1 : masks1) {
      for (const BasisState m2 : masks2) states_.push_back(m1 | m2);
    }
    std::sort(states_.begin(), states_.end());
  } else if (sector_.total_particles) {
    if (capped_binomial(n, static_cast<std::size_t>(*sector_.total_particles)) >
        kMaxSectorStates) {
      throw ResourceError("Basis: sector dimension over budget");
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    combinations(all, *sector_.total_particles, 0, 0, states_);
    std::sort(states_.begin(), states_.end());
  } else {
    if (n > kMaxFullSpaceModes) {
      throw ResourceError("Basis: full-space enumeration over budget, restrict to a sector");
    }
    const BasisState end = BasisState{1} << n;
    states_.reserve(static_cast<std::size_t>(end));
    for (BasisState s = 0; s < end; ++s) states_.push_back(s);
  }
}

std::size_t Basis::index_of(BasisState s) const {
  if (sector_.is_full()) {  // ascending enumeration makes the index the state itself
    if (s >= states_.size()) throw DomainError("Basis: state not in enumeration");
    return static_cast<std::size_t>(s);
  }
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) {
    throw DomainError("Basis: state not in enumeration");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

bool Basis::contains(BasisState s) const {
  if (sector_.is_full()) return s < states_.size();
  return std::binary_search(states_.begin(), states_.end(), s);
}

bool Basis::is_full() const {
  return states_.size() == (std::size_t{1} << modes_.size());
}

std::shared_ptr<const Basis> enumerate_basis(const ModeSet& mode_set,
                                             const SectorFilter& sector) {
  return std::make_shared<const Basis>(mode_set, sector);
}

}  // namespace eprbkit::fock
