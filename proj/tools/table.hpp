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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace jcq::cli {
using Json = nlohmann::ordered_json;
}

namespace jcq::cli {

/// Fixed 12-significant-digit rendering shared by CSV and JSON output.
std::string format_number(double v);

/// Numeric table plus free-form metadata; rendered once the whole command
/// has succeeded so nothing reaches the data stream on failure.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // Emitted as trailing "# key=value" lines in CSV and as meta.summary in JSON.
  std::vector<std::pair<std::string, double>> summary;

  void add_row(std::vector<double> row);
};

enum class Format { Csv, Json };

std::string render_csv(const Table& table);

/// {meta: {command, params, version[, summary]}, rows: [{column: value}]}.
Json render_json(const Table& table, const std::string& command,
                           const Json& params);

}  // namespace jcq::cli
