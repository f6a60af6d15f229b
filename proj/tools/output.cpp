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

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace dirac1d::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* l = std::get_if<long>(&c)) return std::to_string(*l);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

std::string meta_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_real(j.get<double>());
  return j.dump();
}

Json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* l = std::get_if<long>(&c)) return *l;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const OutputRecord& rec) {
  os << "# schema_version=" << kSchemaVersion << '\n';
  os << "# command=" << rec.command << '\n';
  for (const auto& [key, value] : rec.args.items()) {
    os << "# arg." << key << '=' << meta_text(value) << '\n';
  }
  for (const auto& [key, value] : rec.metadata) {
    os << "# " << key << '=' << meta_text(value) << '\n';
  }
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    os << (i ? "," : "") << rec.columns[i];
  }
  os << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << cell_text(row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const OutputRecord& rec) {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = {{"name", rec.command}, {"args", rec.args}};
  Json meta = Json::object();
  for (const auto& [key, value] : rec.metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  doc["columns"] = rec.columns;
  Json rows = Json::array();
  for (const auto& row : rec.rows) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

}  // namespace dirac1d::cli
