// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief Scenario configuration: one JSON document (comments allowed)
 *        selecting a model and its parameters, with environment-variable
 *        overrides and a generic sweep specification.
 *
 * Environment overrides: any key path can be overridden by a variable
 * named EPRBKIT_<path> with '.' replaced by '__', e.g.
 * EPRBKIT_gamma=0.5 or EPRBKIT_sweep__steps=10. Values parse as JSON
 * scalars, falling back to strings.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eprbkit/analyzers.hpp"
#include "eprbkit/lattice.hpp"
#include "eprbkit/wavepackets.hpp"

namespace eprbkit::tool {

inline constexpr const char* kConfigSchema = "eprbkit.config.v1";
inline constexpr const char* kEnvPrefix = "EPRBKIT_";

enum class Model { eprb4, lattice, continuum };

struct SweepSpec {
  std::string parameter;  // dotted config path, e.g. "gamma" or "packet1.velocity.0"
  double from = 0.0;
  double to = 0.0;
  int steps = 1;  // number of evaluation points (>= 1); endpoints included
};

struct ScenarioConfig {
  nlohmann::ordered_json raw;  // post-override document (the inputs echo)

  Model model = Model::eprb4;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output_path = "-";
  std::string output_format = "csv";
  bool timing = false;

  std::optional<SweepSpec> sweep;

  Model parse_model() const;

  /// Analyzer list: explicit n1/n2 pair, a seeded random batch, or the
  /// deterministic grid. Defaults to a single z-z pair.
  std::vector<model::AnalyzerPair> analyzers() const;

  // eprb4
  double gamma() const;

  // continuum
  field::FieldScenario field_scenario() const;

  // lattice
  lattice::LatticeScenario lattice_scenario() const;
  std::vector<double> epsilon_list() const;

  /// Numeric value at a dotted path ("packet1.velocity.0").
  double get_number(const std::string& path) const;
  void set_number(const std::string& path, double value);
};

/// Parse a config file (JSON with comments) and apply environment
/// overrides. Throws DomainError with a location message on bad input.
ScenarioConfig load_config(const std::string& path);

/// Parse from an in-memory string (tests).
ScenarioConfig parse_config(const std::string& text);

/// Apply EPRBKIT_* environment overrides onto a raw document.
void apply_env_overrides(nlohmann::ordered_json& doc);

}  // namespace eprbkit::tool
