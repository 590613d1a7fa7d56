// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "eprbkit/eprb_model.hpp"
#include "eprbkit/field.hpp"
#include "eprbkit/lattice.hpp"
#include "verify.hpp"

namespace eprbkit::tool {

namespace {

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = nullptr;

  explicit OutputSink(const std::string& path) {
    if (path == "-") {
      stream = &std::cout;
    } else {
      file.open(path);
      if (!file) throw DomainError("cannot open output file '" + path + "'");
      stream = &file;
    }
  }
};

std::string natural_sweep_parameter(Model model) {
  switch (model) {
    case Model::eprb4:
      return "gamma";
    case Model::continuum:
      return "t";
    case Model::lattice:
      return "epsilon";
  }
  return "gamma";
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  std::vector<double> out;
  if (spec.steps == 1) {
    out.push_back(spec.from);
    return out;
  }
  for (int k = 0; k < spec.steps; ++k) {
    out.push_back(spec.from + (spec.to - spec.from) * k / (spec.steps - 1));
  }
  return out;
}

void add_analyzers(ResultRow& row, const model::AnalyzerPair& pair) {
  row.add("n1x", pair.n1.x());
  row.add("n1y", pair.n1.y());
  row.add("n1z", pair.n1.z());
  row.add("n2x", pair.n2.x());
  row.add("n2y", pair.n2.y());
  row.add("n2z", pair.n2.z());
}

/// One work item: a sweep point combined with one analyzer pair.
struct WorkItem {
  std::size_t index;
  ScenarioConfig config;  // sweep value already applied
  double sweep_value;
  std::string sweep_parameter;
  model::AnalyzerPair analyzers;
};

ResultRow evaluate_item(const WorkItem& item, bool l_only, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  ResultRow row;
  row.add("schema", std::string(kResultSchema));
  row.add("index", static_cast<std::int64_t>(item.index));
  row.add("model", item.config.raw.value("model", ""));
  row.add(item.sweep_parameter, item.sweep_value);

  switch (item.config.model) {
    case Model::eprb4: {
      add_analyzers(row, item.analyzers);
      const double gamma = item.config.gamma();
      row.add("C", model::correlation_1q(gamma, item.analyzers));
      row.add("provenance", std::string("eprb4.matrix-sandwich+closed-form"));
      break;
    }
    case Model::continuum: {
      field::FieldScenario s = item.config.field_scenario();
      s.analyzers = item.analyzers;
      add_analyzers(row, item.analyzers);
      double l_ref = 0.0;
      std::string provenance;
      if (std::holds_alternative<field::PointImpulse>(s.coupling)) {
        const auto pt = field::entanglement_L_point(s);
        l_ref = pt.value;
        row.add("L_point", pt.value);
        row.add("impulse_inside_window", static_cast<std::int64_t>(pt.inside_window));
        provenance = "continuum.point-closed-form";
      } else {
        const double lg = field::entanglement_L_gaussian(s);
        const double lq = field::entanglement_L_quadrature(s);
        l_ref = lg;
        row.add("L_gaussian", lg);
        row.add("L_quadrature", lq);
        row.add("L_rel_spread", std::abs(lg - lq) / std::max(std::abs(lg), 1e-300));
        provenance = "continuum.gaussian+quadrature";
        if (l_only && std::holds_alternative<field::UniformInSpace>(s.coupling)) {
          try {
            const auto sd = field::steepest_descent_L(s);
            row.add("L_steepest_descent", sd.L_approx);
            row.add("t_min", sd.t_min);
            row.add("d_min", sd.d_min);
            row.add("kappa_dot_ratio", sd.validity.kappa_dot_ratio);
            row.add("kappa_ddot_ratio", sd.validity.kappa_ddot_ratio);
            row.add("sd_valid", static_cast<std::int64_t>(sd.validity.ok()));
          } catch (const DomainError&) {
            // degenerate kinematics: no saddle-point columns
          }
        }
      }
      row.add("eps_L", s.epsilon * l_ref);
      if (!l_only) {
        row.add("C", field::correlation_field(s, l_ref));
      }
      row.add("provenance", provenance);
      break;
    }
    case Model::lattice: {
      lattice::LatticeScenario s = item.config.lattice_scenario();
      s.analyzers = item.analyzers;
      add_analyzers(row, item.analyzers);
      const double exact = lattice::lattice_exact_correlation(s);
      const double pert = lattice::lattice_perturbative_correlation(s);
      row.add("L", lattice::lattice_entanglement_L(s));
      row.add("C_exact", exact);
      row.add("C_pert", pert);
      row.add("abs_diff", std::abs(exact - pert));
      row.add("provenance", std::string("lattice.exact+first-order"));
      break;
    }
  }
  row.add("inputs", item.config.raw.dump());
  if (timing) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    row.add("elapsed_us", static_cast<std::int64_t>(elapsed.count()));
  }
  return row;
}

int run_rows(const GlobalOptions& opts, bool l_only, std::ostream& report,
             bool require_sweep) {
  ScenarioConfig config = resolve_config(opts);
  if (require_sweep && !config.sweep) {
    throw DomainError("sweep: config must contain a sweep specification");
  }
  if (l_only && config.model != Model::continuum) {
    throw DomainError("entangle: only the continuum model has an entanglement integral");
  }

  SweepSpec spec;
  if (config.sweep) {
    spec = *config.sweep;
  } else {
    spec.parameter = natural_sweep_parameter(config.model);
    double current = 0.0;
    try {
      current = config.get_number(spec.parameter);
    } catch (const DomainError&) {
      // Key absent from the document: fall back to the model's default.
      switch (config.model) {
        case Model::eprb4:
          current = config.gamma();
          break;
        case Model::lattice:
          current = config.lattice_scenario().epsilon;
          break;
        case Model::continuum:
          current = config.field_scenario().t;
          break;
      }
    }
    spec.from = spec.to = current;
    spec.steps = 1;
  }

  const auto values = sweep_values(spec);
  const auto analyzer_list = config.analyzers();

  std::vector<WorkItem> items;
  items.reserve(values.size() * analyzer_list.size());
  for (const double v : values) {
    ScenarioConfig point = config;
    point.set_number(spec.parameter, v);
    for (const auto& pair : analyzer_list) {
      items.push_back({items.size(), point, v, spec.parameter, pair});
    }
  }

  std::vector<ResultRow> rows(items.size());
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (const auto& item : items) {
      rows[item.index] = evaluate_item(item, l_only, opts.timing);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= items.size()) return;
          try {
            rows[i] = evaluate_item(items[i], l_only, opts.timing);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  OutputSink sink(config.output_path);
  RowWriter writer(*sink.stream, parse_format(config.output_format));
  for (const auto& row : rows) writer.write(row);

  report << rows.size() << " rows written to "
         << (config.output_path == "-" ? "stdout" : config.output_path) << "\n";
  return kExitOk;
}

}  // namespace

ScenarioConfig resolve_config(const GlobalOptions& opts, bool required) {
  ScenarioConfig config;
  if (!opts.config_path.empty()) {
    config = load_config(opts.config_path);
  } else if (required) {
    throw DomainError("a config file is required (--config)");
  } else {
    config = parse_config(R"({"model":"lattice"})");
  }
  if (opts.seed) {
    config.seed = *opts.seed;
    config.raw["seed"] = *opts.seed;
  }
  if (opts.jobs) config.jobs = *opts.jobs;
  if (opts.output_path) config.output_path = *opts.output_path;
  if (opts.format) config.output_format = *opts.format;
  (void)parse_format(config.output_format);
  return config;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  const VerifyReport report = run_verify_suite(suite);
  report.print(out);
  return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_correlate(const GlobalOptions& opts, std::ostream& report) {
  return run_rows(opts, /*l_only=*/false, report, /*require_sweep=*/false);
}

int cmd_entangle(const GlobalOptions& opts, std::ostream& report) {
  return run_rows(opts, /*l_only=*/true, report, /*require_sweep=*/false);
}

int cmd_sweep(const GlobalOptions& opts, std::ostream& report) {
  return run_rows(opts, /*l_only=*/false, report, /*require_sweep=*/true);
}

int cmd_fit(const GlobalOptions& opts, const std::string& input_path, std::ostream& report) {
  std::ifstream in(input_path);
  if (!in) throw DomainError("fit: cannot open '" + input_path + "'");

  std::vector<model::CorrelationSample> samples;
  std::string first_line;
  std::getline(in, first_line);
  in.seekg(0);

  const auto parse_double = [](const std::string& cell, std::size_t line_no,
                               const std::string& column) {
    try {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
      return v;
    } catch (const std::exception&) {
      throw DomainError("fit: line " + std::to_string(line_no) + ": cannot parse '" + cell +
                        "' as number in column " + column);
    }
  };

  if (!first_line.empty() && first_line.front() == '{') {
    // JSON-lines input.
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto j = nlohmann::ordered_json::parse(line, nullptr, false);
      if (j.is_discarded()) {
        throw DomainError("fit: line " + std::to_string(line_no) + ": malformed JSON row");
      }
      try {
        model::AnalyzerPair pair{{j.at("n1x").get<double>(), j.at("n1y").get<double>(),
                                  j.at("n1z").get<double>()},
                                 {j.at("n2x").get<double>(), j.at("n2y").get<double>(),
                                  j.at("n2z").get<double>()}};
        samples.push_back({pair, j.at("C").get<double>()});
      } catch (const nlohmann::ordered_json::exception& err) {
        throw DomainError("fit: line " + std::to_string(line_no) + ": " + err.what());
      }
    }
  } else {
    const auto rows = parse_csv(in);
    if (rows.empty()) throw EstimationError("fit: empty input file");
    const auto& header = rows.front();
    const auto column = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
      }
      throw DomainError("fit: input is missing column '" + name + "'");
    };
    const std::size_t c_n1x = column("n1x"), c_n1y = column("n1y"), c_n1z = column("n1z");
    const std::size_t c_n2x = column("n2x"), c_n2y = column("n2y"), c_n2z = column("n2z");
    const std::size_t c_val = column("C");
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto& cells = rows[r];
      if (cells.size() != header.size()) {
        throw DomainError("fit: line " + std::to_string(r + 1) + ": expected " +
                          std::to_string(header.size()) + " cells, found " +
                          std::to_string(cells.size()));
      }
      model::AnalyzerPair pair{{parse_double(cells[c_n1x], r + 1, "n1x"),
                                parse_double(cells[c_n1y], r + 1, "n1y"),
                                parse_double(cells[c_n1z], r + 1, "n1z")},
                               {parse_double(cells[c_n2x], r + 1, "n2x"),
                                parse_double(cells[c_n2y], r + 1, "n2y"),
                                parse_double(cells[c_n2z], r + 1, "n2z")}};
      samples.push_back({pair, parse_double(cells[c_val], r + 1, "C")});
    }
  }

  if (samples.empty()) throw EstimationError("fit: no samples in input");
  const auto fit = model::fit_two_gamma(samples);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "s_hat = %.12g\nresidual = %.6g\nstandard_error = %.6g\nsamples = %zu\n",
                fit.s_hat, fit.residual, fit.standard_error, fit.n_samples);
  report << buf;

  if (opts.output_path && *opts.output_path != "-") {
    OutputSink sink(*opts.output_path);
    RowWriter writer(*sink.stream,
                     parse_format(opts.format.value_or("csv")));
    ResultRow row;
    row.add("schema", std::string(kResultSchema));
    row.add("s_hat", fit.s_hat);
    row.add("residual", fit.residual);
    row.add("standard_error", fit.standard_error);
    row.add("samples", static_cast<std::int64_t>(fit.n_samples));
    writer.write(row);
  }
  return kExitOk;
}

int cmd_lattice_compare(const GlobalOptions& opts, std::ostream& report) {
  ScenarioConfig config = resolve_config(opts, /*required=*/false);
  if (config.model != Model::lattice) {
    throw DomainError("lattice-compare: config model must be 'lattice'");
  }
  lattice::LatticeScenario scenario = config.lattice_scenario();
  const auto epsilons = config.epsilon_list();

  std::vector<ResultRow> rows;
  std::vector<double> log_eps, log_diff;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    lattice::LatticeScenario s = scenario;
    s.epsilon = epsilons[i];
    const double exact = lattice::lattice_exact_correlation(s);
    const double pert = lattice::lattice_perturbative_correlation(s);
    const double diff = std::abs(exact - pert);
    ResultRow row;
    row.add("schema", std::string(kResultSchema));
    row.add("index", static_cast<std::int64_t>(i));
    row.add("epsilon", epsilons[i]);
    row.add("C_exact", exact);
    row.add("C_pert", pert);
    row.add("abs_diff", diff);
    row.add("inputs", config.raw.dump());
    rows.push_back(std::move(row));
    if (epsilons[i] > 0.0 && diff > 0.0) {
      log_eps.push_back(std::log(epsilons[i]));
      log_diff.push_back(std::log(diff));
    }

    char line[120];
    std::snprintf(line, sizeof(line), "epsilon = %-10.4g |C_exact - C_pert| = %.6e\n",
                  epsilons[i], diff);
    report << line;
  }

  OutputSink sink(config.output_path);
  RowWriter writer(*sink.stream, parse_format(config.output_format));
  for (const auto& row : rows) writer.write(row);

  if (log_eps.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_eps.size(); ++i) {
      sx += log_eps[i];
      sy += log_diff[i];
      sxx += log_eps[i] * log_eps[i];
      sxy += log_eps[i] * log_diff[i];
    }
    const double n = double(log_eps.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    char line[80];
    std::snprintf(line, sizeof(line), "fitted log-log slope: %.4f\n", slope);
    report << line;
  } else {
    report << "slope unavailable (need at least two nonzero-epsilon rows)\n";
  }
  return kExitOk;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const EstimationError& e) {
    err << "estimation error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (estimate " << e.estimate() << ", bound "
        << e.error_bound() << ")\n";
    return kExitVerificationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace eprbkit::tool
