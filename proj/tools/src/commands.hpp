// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file commands.hpp
 * @brief The eprbkit command verbs.
 *
 * Exit codes: 0 success, 1 verification/estimation failure, 2 usage or
 * parse error, 3 resource limit.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"
#include "output.hpp"

namespace eprbkit::tool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::string> output_path;  // overrides the config
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  bool timing = false;
};

/// Load the config named by the options and fold the flag overrides in.
ScenarioConfig resolve_config(const GlobalOptions& opts, bool required = true);

int cmd_verify(const std::string& suite, std::ostream& out);
int cmd_correlate(const GlobalOptions& opts, std::ostream& report);
int cmd_entangle(const GlobalOptions& opts, std::ostream& report);
int cmd_sweep(const GlobalOptions& opts, std::ostream& report);
int cmd_fit(const GlobalOptions& opts, const std::string& input_path, std::ostream& report);
int cmd_lattice_compare(const GlobalOptions& opts, std::ostream& report);

/// Maps an in-flight exception to the documented exit code.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace eprbkit::tool
