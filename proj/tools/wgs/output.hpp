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

#ifndef WGS_TOOLS_OUTPUT_HPP
#define WGS_TOOLS_OUTPUT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "tasks.hpp"

namespace wgs::cli {

/// Provenance written ahead of the data.
struct RunHeader {
  std::string version;
  Task task = Task::verify;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, std::string>> settings;
};

/// CSV with '#'-prefixed header lines, then a column row and one row per grid
/// point. Reals are printed with 17 significant digits.
void write_csv(std::ostream &out, const RunHeader &header, const Table &table);

/// {"header": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream &out, const RunHeader &header, const Table &table);

}  // namespace wgs::cli

#endif  // WGS_TOOLS_OUTPUT_HPP
