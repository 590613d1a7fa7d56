// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file modes.hpp
 * @brief Fermionic mode labels and ordered mode sets.
 *
 * A mode is one fermionic degree of freedom, labelled by species (1 or 2),
 * spin (1 ≡ up, 2 ≡ down, carrying the sign convention alpha_1 = +1,
 * alpha_2 = -1) and an optional lattice site. A ModeSet fixes the total
 * order of its modes — and with it the fermionic sign convention — as
 * (species, spin, site) lexicographic.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eprbkit/errors.hpp"

namespace eprbkit::fock {

/// Spin eigenvalue attached to a spin index: alpha_1 = +1, alpha_2 = -1.
inline constexpr int spin_sign(int spin_index) { return spin_index == 1 ? +1 : -1; }

/// The complement index: 1 <-> 2.
inline constexpr int complement(int index) { return index == 1 ? 2 : 1; }

/// One fermionic mode. `site` is -1 for the zero-dimensional models.
struct Mode {
  std::int8_t species = 1;  // 1 or 2; pure label, never used arithmetically
  std::int8_t spin = 1;     // 1 (up) or 2 (down)
  std::int32_t site = -1;   // lattice site, or -1 when absent

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

std::string to_string(const Mode& m);

/**
 * Ordered, duplicate-free collection of modes.
 *
 * The storage order is always (species, spin, site) lexicographic; the
 * constructor sorts its input and rejects duplicates. The position of a
 * mode in this order defines the fermionic sign convention used
 * throughout: applying a creation operator for mode k to an occupation
 * state picks up (-1)^(number of occupied modes preceding k).
 */
class ModeSet {
 public:
  ModeSet() = default;
  explicit ModeSet(std::vector<Mode> modes);

  std::size_t size() const { return modes_.size(); }
  const Mode& mode(std::size_t index) const { return modes_[index]; }
  const std::vector<Mode>& modes() const { return modes_; }

  /// Position of `m` in the total order; DomainError if absent.
  std::size_t index_of(const Mode& m) const;
  bool contains(const Mode& m) const;

  /// Indices of all modes with the given species (and optionally spin).
  std::vector<std::size_t> indices_where(int species, std::optional<int> spin = {}) const;

  friend bool operator==(const ModeSet&, const ModeSet&) = default;

  /// The four modes of the zero-dimensional EPRB model:
  /// (species, spin) in {1,2} x {1,2}, no site label.
  static ModeSet eprb4();

  /// Lattice modes: every (species, spin) pair in `internal` at each of
  /// `sites` sites.
  static ModeSet lattice(int sites, const std::vector<std::pair<int, int>>& internal);

 private:
  std::vector<Mode> modes_;
};

/// Occupation-sector restriction used when enumerating a basis.
/// Empty filter selects the full Fock space.
struct SectorFilter {
  std::optional<int> total_particles;
  /// {n_species1, n_species2}; use e.g. {1, 1} for "one particle per species".
  std::optional<std::pair<int, int>> per_species;

  bool is_full() const { return !total_particles && !per_species; }

  friend bool operator==(const SectorFilter&, const SectorFilter&) = default;
};

}  // namespace eprbkit::fock
