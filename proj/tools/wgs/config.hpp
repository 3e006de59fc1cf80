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

#ifndef WGS_TOOLS_CONFIG_HPP
#define WGS_TOOLS_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgs/geometry.hpp"
#include "wgs/state.hpp"

namespace wgs::cli {

enum class Task { correlations, entropy_scan, bounds_scan, dynamics, graph_rank, verify, mw };

const char *task_name(Task task);
std::optional<Task> parse_task(const std::string &name);

enum class Format { csv, json };

/// Experiment description read from a `key = value` file.
///
/// Lists are comma separated; integer ranges are written `a:b` (inclusive) and
/// real-valued grids `start:stop:count` (count evenly spaced points, both ends
/// included). Reals accept fractions such as `1/3`. All angles are multiples
/// of pi. `#` starts a comment.
struct ExperimentConfig {
  // geometry
  std::vector<std::size_t> extents{100};
  std::vector<Boundary> boundary{Boundary::open};

  // coupling law; the parameter list of the chosen law may hold several values
  std::string law = "power";
  std::vector<double> law_values{3.0};
  std::vector<std::pair<double, double>> table;
  std::string disorder = "none";
  double disorder_a = 0.0;
  double disorder_b = 1.0;
  std::optional<std::uint64_t> disorder_seed;

  // time, in units of pi
  std::vector<double> t_over_pi{0.3};

  // product input
  std::string input = "plus";
  double input_theta_over_pi = 0.5;
  double input_phi_over_pi = 0.0;

  // task parameters
  std::vector<std::size_t> block_sizes{1, 2, 3, 4};
  std::optional<std::size_t> block_start;
  std::vector<std::size_t> separations{1, 2, 3, 4, 5};
  std::optional<std::size_t> reference_site;
  std::vector<std::size_t> subblocks{4};
  double radius = 50.0;
  std::size_t max_subset = 10;
  std::vector<std::size_t> block_sides{2, 3, 4};
  std::size_t lmax = 7;
  std::size_t separation = 5;
  std::size_t instances = 200;
  std::size_t max_sites = 12;
  std::size_t verify_subset = 6;
  double tolerance = 1e-10;
  std::size_t mw_samples = 0;  // 0: every site

  std::optional<Task> task;
  std::optional<std::string> output;
  std::optional<Format> format;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  std::size_t sites() const;
  Lattice lattice() const;
  std::string law_parameter_name() const;
  CouplingLaw coupling_law(double parameter) const;
  ProductInput product_input() const;

  /// Every effective setting (defaults included) as key/value text, in a
  /// fixed order. Written into output headers.
  std::vector<std::pair<std::string, std::string>> settings() const;
};

/// Throws Error(Errc::config) with "line N: key 'k': ..." diagnostics.
ExperimentConfig parse_config(std::istream &in);
ExperimentConfig load_config(const std::string &path);

/// Checks ranges that depend on more than one key for the given task.
void validate(const ExperimentConfig &config, Task task);

}  // namespace wgs::cli

#endif  // WGS_TOOLS_CONFIG_HPP
