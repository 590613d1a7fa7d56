// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Occupation-number basis enumeration for a finite mode set.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eprbkit/modes.hpp"

namespace eprbkit::fock {

/// Occupation bit pattern; bit k is the occupancy of mode k in ModeSet order.
using BasisState = std::uint64_t;

/**
 * Enumerated occupation-number basis over a ModeSet, optionally restricted
 * to a particle-number sector. States are listed in increasing bit-pattern
 * order, which makes the enumeration deterministic given the mode order.
 */
class Basis {
 public:
  Basis(ModeSet modes, SectorFilter sector = {});

  const ModeSet& mode_set() const { return modes_; }
  const SectorFilter& sector() const { return sector_; }

  std::size_t size() const { return states_.size(); }
  BasisState state(std::size_t index) const { return states_[index]; }
  const std::vector<BasisState>& states() const { return states_; }

  /// Index of `s` in the enumeration; DomainError if not a member.
  std::size_t index_of(BasisState s) const;
  bool contains(BasisState s) const;

  /// True when every occupation pattern of the mode set is present.
  bool is_full() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  ModeSet modes_;
  SectorFilter sector_;
  std::vector<BasisState> states_;
};

/**
 * Enumerate the basis of `mode_set` restricted to `sector`.
 *
 * The full space has 2^n states; a total-count sector n_p has C(n, n_p).
 * Throws EmptySectorError when the requested occupancies exceed the
 * available modes.
 */
std::shared_ptr<const Basis> enumerate_basis(const ModeSet& mode_set,
                                             const SectorFilter& sector = {});

}  // namespace eprbkit::fock
