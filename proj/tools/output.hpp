// Copyright 2026 The dirac1d Authors.
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

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace dirac1d::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long, bool, std::string>;

inline constexpr const char* kSchemaVersion = "1.0";

/// Tabular command output shared by the CSV and JSON writers.
struct OutputRecord {
  std::string command;
  Json args = Json::object();
  std::vector<std::pair<std::string, Json>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// 17 significant digits; nan/inf spelled out.
std::string format_real(double v);

void write_csv(std::ostream& os, const OutputRecord& rec);
void write_json(std::ostream& os, const OutputRecord& rec);

}  // namespace dirac1d::cli
