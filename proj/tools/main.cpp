// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

// eprbkit: spin-correlation models in fermionic Fock space, first-order
// field dynamics, and the vacuum representation, from the command line.
//
// All physical inputs are dimensionless numbers in hbar = 1 units.

#include <iostream>

#include <CLI11.hpp>

#include "src/commands.hpp"

int main(int argc, char** argv) {
  using namespace eprbkit::tool;

  CLI::App app{"eprbkit - EPRB spin correlations in fermionic Fock space and field theory"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string suite = "all";
  std::string fit_input;

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* config_opt = cmd->add_option("--config", opts.config_path, "scenario config file (JSON)");
    if (needs_config) config_opt->required();
    cmd->add_option("--output", opts.output_path, "output path ('-' for stdout)");
    cmd->add_option("--format", opts.format, "output format: csv or jsonl");
    cmd->add_option("--seed", opts.seed, "seed override for analyzer sampling");
    cmd->add_option("--jobs", opts.jobs, "worker threads for sweep evaluation");
    cmd->add_flag("--timing", opts.timing,
                  "append a per-row elapsed_us column (not covered by the determinism "
                  "guarantee)");
  };

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "algebra | eprb | field | vacuum-rep | all")
      ->default_val("all");

  auto* correlate = app.add_subcommand("correlate", "evaluate spin correlations");
  add_common(correlate, true);

  auto* entangle = app.add_subcommand("entangle", "evaluate the entanglement integral only");
  add_common(entangle, true);

  auto* sweep = app.add_subcommand("sweep", "sweep an arbitrary numeric config parameter");
  add_common(sweep, true);

  auto* fit = app.add_subcommand("fit", "least-squares entanglement estimate from samples");
  fit->add_option("input", fit_input, "sample file from `correlate` (csv or jsonl)")
      ->required();
  add_common(fit, false);

  auto* compare = app.add_subcommand("lattice-compare", "exact vs first-order on the lattice");
  add_common(compare, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(suite, std::cout);
    if (correlate->parsed()) return cmd_correlate(opts, std::cerr);
    if (entangle->parsed()) return cmd_entangle(opts, std::cerr);
    if (sweep->parsed()) return cmd_sweep(opts, std::cerr);
    if (fit->parsed()) return cmd_fit(opts, fit_input, std::cout);
    if (compare->parsed()) return cmd_lattice_compare(opts, std::cout);
  } catch (...) {
    return exit_code_for_current_exception(std::cerr);
  }
  return kExitUsage;
}
