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

#ifndef WGS_TOOLS_TASKS_HPP
#define WGS_TOOLS_TASKS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "config.hpp"

namespace wgs::cli {

/// One table cell; monostate is written as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Summary values written into the output header (e.g. max trace distance).
  std::vector<std::pair<std::string, std::string>> notes;
  /// 0 on success, 2 when a verification run misses its tolerance.
  int status = 0;
};

/// Runs one task. Grid points are spread over `config.threads` workers and
/// reassembled in grid order, so the table does not depend on scheduling.
Table run_task(Task task, const ExperimentConfig &config);

}  // namespace wgs::cli

#endif  // WGS_TOOLS_TASKS_HPP
