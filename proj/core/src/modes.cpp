// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eprbkit/modes.hpp"

#include <algorithm>

namespace eprbkit::fock {

std::string to_string(const Mode& m) {
  std::string out = "([" + std::to_string(int(m.species)) + "]," + std::to_string(int(m.spin));
  if (m.site >= 0) out += ",s" + std::to_string(m.site);
  out += ")";
  return out;
}

ModeSet::ModeSet(std::vector<Mode> modes) : modes_(std::move(modes)) {
  std::sort(modes_.begin(), modes_.end());
  if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end()) {
    throw DomainError("ModeSet: duplicate mode");
  }
  for (const Mode& m : modes_) {
    if ((m.species != 1 && m.species != 2) || (m.spin != 1 && m.spin != 2)) {
      throw DomainError("ModeSet: species and spin indices must be 1 or 2");
    }
  }
  if (modes_.size() > 64) {
    throw DomainError("ModeSet: at most 64 modes supported");
  }
}

std::size_t ModeSet::index_of(const Mode& m) const {
  auto it = std::lower_bound(modes_.begin(), modes_.end(), m);
  if (it == modes_.end() || *it != m) {
    throw DomainError("ModeSet: mode " + to_string(m) + " not in set");
  }
  return static_cast<std::size_t>(it - modes_.begin());
}

bool ModeSet::contains(const Mode& m) const {
  return std::binary_search(modes_.begin(), modes_.end(), m);
}

std::vector<std::size_t> ModeSet::indices_where(int species, std::optional<int> spin) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (modes_[k].species != species) continue;
    if (spin && modes_[k].spin != *spin) continue;
    out.push_back(k);
  }
  return out;
}

ModeSet ModeSet::eprb4() {
  return ModeSet({{1, 1, -1}, {1, 2, -1}, {2, 1, -1}, {2, 2, -1}});
}

ModeSet ModeSet::lattice(int sites, const std::vector<std::pair<int, int>>& internal) {
  if (sites < 1) throw DomainError("ModeSet::lattice: need at least one site");
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(sites) * internal.size());
  for (const auto& [species, spin] : internal) {
    for (int s = 0; s < sites; ++s) {
      modes.push_back({static_cast<std::int8_t>(species), static_cast<std::int8_t>(spin), s});
    }
  }
  return ModeSet(std::move(modes));
}

}  // namespace eprbkit::fock
