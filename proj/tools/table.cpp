// Copyright 2026 The jcqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifndef JCQ_VERSION
#define JCQ_VERSION "0.0.0"
#endif

namespace jcq::cli {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match column count");
  }
  rows.push_back(std::move(row));
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_number(row[i]);
    }
    os << '\n';
  }
  for (const auto& [key, value] : table.summary) {
    os << "# " << key << '=' << format_number(value) << '\n';
  }
  return os.str();
}

Json render_json(const Table& table, const std::string& command,
                           const Json& params) {
  // Round-trip through the 12-digit text form so JSON and CSV agree.
  auto number = [](double v) { return std::stod(format_number(v)); };

  Json meta = {
      {"command", command}, {"params", params}, {"version", JCQ_VERSION}};
  if (!table.summary.empty()) {
    Json summary = Json::object();
    for (const auto& [key, value] : table.summary) summary[key] = number(value);
    meta["summary"] = summary;
  }
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = number(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return {{"meta", meta}, {"rows", rows}};
}

}  // namespace jcq::cli
