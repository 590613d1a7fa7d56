// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file output.hpp
 * @brief Machine-readable result rows: CSV (default) and JSON-lines.
 *
 * Every row echoes the full scenario inputs for reproducibility. Doubles
 * are printed with 17 significant digits so identical runs produce
 * bit-identical bytes; the optional timing column is the one documented
 * exception to that guarantee.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace eprbkit::tool {

inline constexpr const char* kResultSchema = "eprbkit.result.v1";

using Value = std::variant<std::int64_t, double, std::string>;

struct ResultRow {
  std::vector<std::pair<std::string, Value>> fields;

  void add(const std::string& key, Value v) { fields.emplace_back(key, std::move(v)); }
};

enum class OutputFormat { csv, jsonl };

OutputFormat parse_format(const std::string& name);  // "csv" | "jsonl"

std::string format_value(const Value& v);

/// Streams rows in a fixed column order taken from the first row.
class RowWriter {
 public:
  RowWriter(std::ostream& out, OutputFormat format);
  void write(const ResultRow& row);

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool header_written_ = false;
};

/// Minimal CSV reader matching RowWriter's quoting; used by `fit` and the
/// round-trip checks. Returns one vector of cells per line.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// Splits one CSV record honoring double-quote escaping.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace eprbkit::tool
