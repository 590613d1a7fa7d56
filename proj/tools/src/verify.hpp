// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Named invariant suites behind `eprbkit verify`.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eprbkit::tool {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void print(std::ostream& out) const;
};

/// suite: algebra | eprb | field | vacuum-rep | all. Unknown names throw
/// DomainError (usage error).
VerifyReport run_verify_suite(const std::string& suite);

}  // namespace eprbkit::tool
