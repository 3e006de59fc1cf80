// Copyright 2026 The wgstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "output.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wgs::cli {

namespace {

std::string real_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_cell(const Cell &cell) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return real_text(v); }
    std::string operator()(const std::string &s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      return quoted + "\"";
    }
  } visitor;
  return std::visit(visitor, cell);
}

nlohmann::json json_cell(const Cell &cell) {
  struct {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::json operator()(const std::string &s) const { return s; }
  } visitor;
  return std::visit(visitor, cell);
}

}  // namespace

void write_csv(std::ostream &out, const RunHeader &h, const Table &table) {
  out << "# wgs " << h.version << "\n";
  out << "# task = " << task_name(h.task) << "\n";
  out << "# seed = " << h.seed << "\n";
  out << "# threads = " << h.threads << "\n";
  out << "# wall_time_s = " << real_text(h.wall_seconds) << "\n";
  for (const auto &[key, value] : h.settings) out << "# config." << key << " = " << value << "\n";
  for (const auto &[key, value] : table.notes) out << "# " << key << " = " << value << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream &out, const RunHeader &h, const Table &table) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto &[key, value] : h.settings) config[key] = value;
  nlohmann::json notes = nlohmann::json::object();
  for (const auto &[key, value] : table.notes) notes[key] = value;

  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto &cell : row) r.push_back(json_cell(cell));
    rows.push_back(std::move(r));
  }
  const nlohmann::json doc = {
      {"header",
       {{"version", h.version},
        {"task", task_name(h.task)},
        {"seed", h.seed},
        {"threads", h.threads},
        {"wall_time_s", h.wall_seconds},
        {"config", config},
        {"notes", notes}}},
      {"columns", table.columns},
      {"rows", rows}};
  out << doc.dump(2) << "\n";
}

}  // namespace wgs::cli
