// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

extern char** environ;

namespace eprbkit::tool {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& what) {
  throw DomainError("config: " + what);
}

const ordered_json* find_path(const ordered_json& doc, const std::string& path) {
  const ordered_json* node = &doc;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (node->is_array()) {
      char* end = nullptr;
      const long idx = std::strtol(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0' || idx < 0 ||
          idx >= static_cast<long>(node->size())) {
        return nullptr;
      }
      node = &(*node)[static_cast<std::size_t>(idx)];
    } else if (node->is_object()) {
      auto it = node->find(key);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else {
      return nullptr;
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return node;
}

ordered_json* find_path_mutable(ordered_json& doc, const std::string& path, bool create) {
  ordered_json* node = &doc;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (node->is_array()) {
      char* end = nullptr;
      const long idx = std::strtol(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0' || idx < 0 ||
          idx >= static_cast<long>(node->size())) {
        return nullptr;
      }
      node = &(*node)[static_cast<std::size_t>(idx)];
    } else {
      if (!node->is_object() && !node->is_null()) return nullptr;
      if (!node->contains(key)) {
        if (!create) return nullptr;
        (*node)[key] = nullptr;
      }
      node = &(*node)[key];
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return node;
}

Eigen::Vector3d vec3(const ordered_json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) config_error(what + " must be a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

field::TimeProfile parse_profile(const ordered_json& j) {
  if (j.is_number()) return field::TimeProfile::constant(j.get<double>());
  const std::string type = j.value("type", "constant");
  if (type == "constant") {
    return field::TimeProfile::constant(j.value("kappa", 1.0));
  }
  if (type == "exponential") {
    return field::TimeProfile::exponential(j.value("kappa", 1.0), j.value("rate", 0.0),
                                           j.value("t_ref", 0.0));
  }
  if (type == "gaussian_pulse") {
    return field::TimeProfile::gaussian_pulse(j.value("kappa", 1.0), j.value("t_center", 0.0),
                                              j.value("t_width", 1.0));
  }
  config_error("unknown time profile type '" + type + "'");
}

bool profile_is_constant(const ordered_json& j) {
  return j.is_number() || j.value("type", "constant") == "constant";
}

}  // namespace

Model ScenarioConfig::parse_model() const {
  const std::string name = raw.value("model", "");
  if (name == "eprb4") return Model::eprb4;
  if (name == "lattice") return Model::lattice;
  if (name == "continuum") return Model::continuum;
  config_error("model must be one of eprb4, lattice, continuum (got '" + name + "')");
}

std::vector<model::AnalyzerPair> ScenarioConfig::analyzers() const {
  if (!raw.contains("analyzers")) {
    return {model::AnalyzerPair{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}}};
  }
  const ordered_json& a = raw.at("analyzers");
  if (a.contains("random")) {
    return model::random_analyzers(a.at("random").get<std::size_t>(), seed);
  }
  if (a.contains("grid")) {
    return model::analyzer_grid(a.at("grid").get<std::size_t>());
  }
  model::AnalyzerPair pair{vec3(a.at("n1"), "analyzers.n1"), vec3(a.at("n2"), "analyzers.n2")};
  pair.n1.normalize();
  pair.n2.normalize();
  return {pair};
}

double ScenarioConfig::gamma() const { return raw.value("gamma", 0.0); }

field::FieldScenario ScenarioConfig::field_scenario() const {
  field::FieldScenario s;
  const auto parse_packet = [&](const char* key) {
    if (!raw.contains(key)) config_error(std::string("continuum model needs ") + key);
    const ordered_json& p = raw.at(key);
    field::Wavepacket wp;
    wp.center = vec3(p.at("center"), std::string(key) + ".center");
    wp.velocity = vec3(p.at("velocity"), std::string(key) + ".velocity");
    wp.width_param = p.at("alpha").get<double>();
    wp.mass = p.at("mass").get<double>();
    return wp;
  };
  s.packet1 = parse_packet("packet1");
  s.packet2 = parse_packet("packet2");
  s.epsilon = raw.value("epsilon", 0.0);
  s.t0 = raw.value("t0", 0.0);
  s.t = raw.value("t", 1.0);
  const auto pairs = analyzers();
  s.analyzers = pairs.front();

  if (!raw.contains("coupling")) config_error("continuum model needs a coupling");
  const ordered_json& c = raw.at("coupling");
  const std::string kind = c.value("kind", "uniform");
  if (kind == "uniform") {
    if (c.contains("profile")) {
      s.coupling = field::UniformInSpace{parse_profile(c.at("profile"))};
    } else {
      s.coupling = field::UniformInSpace{field::TimeProfile::constant(c.value("kappa", 1.0))};
    }
  } else if (kind == "point") {
    s.coupling = field::PointImpulse{c.value("kappa", 1.0), vec3(c.at("location"), "coupling.location"),
                                     c.value("time", 0.0)};
  } else if (kind == "grid") {
    field::SampledGrid grid;
    grid.origin = vec3(c.at("origin"), "coupling.origin");
    grid.spacing = c.at("spacing").get<double>();
    const ordered_json& shape = c.at("shape");
    if (!shape.is_array() || shape.size() != 3) config_error("coupling.shape must have 3 entries");
    grid.shape = {shape[0].get<int>(), shape[1].get<int>(), shape[2].get<int>()};
    grid.values = c.at("values").get<std::vector<double>>();
    if (c.contains("profile")) grid.time_factor = parse_profile(c.at("profile"));
    grid.validate();
    s.coupling = grid;
  } else {
    config_error("coupling.kind must be uniform, point or grid");
  }
  s.validate();
  return s;
}

lattice::LatticeScenario ScenarioConfig::lattice_scenario() const {
  lattice::LatticeScenario s;
  if (raw.contains("lattice")) {
    const ordered_json& l = raw.at("lattice");
    s.config.sites = l.value("sites", 8);
    s.config.spacing = l.value("spacing", 1.0);
    s.config.mass = l.value("mass", 1.0);
  }
  const auto parse_packet = [&](const char* key, lattice::LatticePacket fallback) {
    if (!raw.contains(key)) return fallback;
    const ordered_json& p = raw.at(key);
    return lattice::LatticePacket{p.value("center", fallback.center),
                                  p.value("velocity", fallback.velocity),
                                  p.value("alpha", fallback.width_param)};
  };
  // The default scenario: counter-moving packets on an 8-site ring.
  s.packet1 = parse_packet("packet1", {2.0, 0.6, 1.0});
  s.packet2 = parse_packet("packet2", {5.0, -0.6, 1.0});
  s.epsilon = raw.value("epsilon", 0.01);
  s.t0 = raw.value("t0", 0.0);
  s.t = raw.value("t", 3.0);
  if (raw.contains("kappa_sites")) {
    s.kappa_sites = raw.at("kappa_sites").get<std::vector<double>>();
  }
  if (raw.contains("kappa_profile")) {
    s.kappa_time = parse_profile(raw.at("kappa_profile"));
    s.kappa_time_constant = profile_is_constant(raw.at("kappa_profile"));
  }
  if (raw.contains("time_steps")) s.time_steps = raw.at("time_steps").get<int>();
  const auto pairs = analyzers();
  s.analyzers = pairs.front();
  s.validate();
  return s;
}

std::vector<double> ScenarioConfig::epsilon_list() const {
  if (raw.contains("epsilons")) return raw.at("epsilons").get<std::vector<double>>();
  return {1e-1, 3e-2, 1e-2, 3e-3};
}

double ScenarioConfig::get_number(const std::string& path) const {
  const ordered_json* node = find_path(raw, path);
  if (!node || !node->is_number()) {
    config_error("sweep parameter '" + path + "' is not a numeric config entry");
  }
  return node->get<double>();
}

void ScenarioConfig::set_number(const std::string& path, double value) {
  ordered_json* node = find_path_mutable(raw, path, true);
  if (!node) config_error("cannot set config entry '" + path + "'");
  *node = value;
}

void apply_env_overrides(nlohmann::ordered_json& doc) {
  for (char** env = environ; *env; ++env) {
    const std::string entry = *env;
    if (entry.rfind(kEnvPrefix, 0) != 0) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string path = entry.substr(std::string(kEnvPrefix).size(), eq - std::string(kEnvPrefix).size());
    const std::string value = entry.substr(eq + 1);
    // '__' separates nesting levels.
    std::string dotted;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] == '_' && i + 1 < path.size() && path[i + 1] == '_') {
        dotted += '.';
        ++i;
      } else {
        dotted += path[i];
      }
    }
    nlohmann::ordered_json* node = find_path_mutable(doc, dotted, true);
    if (!node) continue;
    const auto parsed =
        nlohmann::ordered_json::parse(value, nullptr, /*allow_exceptions=*/false);
    *node = parsed.is_discarded() ? nlohmann::ordered_json(value) : parsed;
  }
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  try {
    config.raw = nlohmann::ordered_json::parse(text, nullptr, /*allow_exceptions=*/true,
                                               /*ignore_comments=*/true);
  } catch (const nlohmann::ordered_json::parse_error& err) {
    config_error(std::string("parse error: ") + err.what());
  }
  if (!config.raw.is_object()) config_error("top level must be an object");
  apply_env_overrides(config.raw);

  config.model = config.parse_model();
  config.seed = config.raw.value("seed", std::uint64_t{0});
  config.jobs = config.raw.value("jobs", 1);
  if (config.jobs < 1) config_error("jobs must be >= 1");
  if (config.raw.contains("output")) {
    const auto& o = config.raw.at("output");
    config.output_path = o.value("path", "-");
    config.output_format = o.value("format", "csv");
  }
  if (config.raw.contains("sweep")) {
    const auto& sw = config.raw.at("sweep");
    SweepSpec spec;
    spec.parameter = sw.value("parameter", "");
    if (spec.parameter.empty()) config_error("sweep.parameter is required");
    spec.from = sw.value("from", 0.0);
    spec.to = sw.value("to", 0.0);
    spec.steps = sw.value("steps", 1);
    if (spec.steps < 1) config_error("sweep.steps must be >= 1");
    config.sweep = spec;
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace eprbkit::tool
