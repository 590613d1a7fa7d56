// Copyright 2026 The eprbkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"

#include <cstdio>
#include <istream>

#include <json.hpp>

#include "eprbkit/errors.hpp"

namespace eprbkit::tool {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw DomainError("unknown output format '" + name + "' (expected csv or jsonl)");
}

std::string format_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", *d);
    return buf;
  }
  return std::get<std::string>(v);
}

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

RowWriter::RowWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

void RowWriter::write(const ResultRow& row) {
  if (format_ == OutputFormat::csv) {
    if (!header_written_) {
      for (std::size_t i = 0; i < row.fields.size(); ++i) {
        out_ << (i ? "," : "") << csv_escape(row.fields[i].first);
      }
      out_ << '\n';
      header_written_ = true;
    }
    for (std::size_t i = 0; i < row.fields.size(); ++i) {
      out_ << (i ? "," : "") << csv_escape(format_value(row.fields[i].second));
    }
    out_ << '\n';
  } else {
    nlohmann::ordered_json j;
    for (const auto& [key, value] : row.fields) {
      if (const auto* i = std::get_if<std::int64_t>(&value)) {
        j[key] = *i;
      } else if (const auto* d = std::get_if<double>(&value)) {
        j[key] = *d;
      } else {
        // The inputs echo is itself JSON; embed it structurally.
        const auto& s = std::get<std::string>(value);
        if (key == "inputs") {
          j[key] = nlohmann::ordered_json::parse(s);
        } else {
          j[key] = s;
        }
      }
    }
    out_ << j.dump() << '\n';
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

}  // namespace eprbkit::tool
