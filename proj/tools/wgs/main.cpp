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

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#ifdef WGS_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "config.hpp"
#include "output.hpp"
#include "tasks.hpp"
#include "wgs/error.hpp"
#include "wgs/parallel.hpp"

#ifndef WGS_VERSION
#define WGS_VERSION "unknown"
#endif

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string format;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
};

void add_flags(CLI::App &sub, Flags &f) {
  sub.add_option("--config,-c", f.config, "experiment config file (key = value)")->check(CLI::ExistingFile);
  sub.add_option("--out,-o", f.out, "output path (default: stdout)");
  sub.add_option("--format,-f", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--threads,-j", f.threads, "worker threads (0: all cores)");
  sub.add_option("--seed,-s", f.seed, "random seed, overrides the config");
}

int run(wgs::cli::Task task, const Flags &f) {
  using namespace wgs::cli;
  ExperimentConfig config = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  if (f.seed) config.seed = *f.seed;
  if (f.threads) config.threads = *f.threads;
  if (!f.format.empty()) config.format = f.format == "json" ? Format::json : Format::csv;
  if (!f.out.empty()) config.output = f.out;

  const auto start = std::chrono::steady_clock::now();
  const Table table = run_task(task, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  RunHeader header{WGS_VERSION, task, config.seed, wgs::resolve_threads(config.threads), elapsed.count(),
                   config.settings()};
  std::ofstream file;
  if (config.output) {
    file.open(*config.output);
    if (!file) throw wgs::Error(wgs::Errc::config, "cannot write output file '" + *config.output + "'");
  }
  std::ostream &out = config.output ? file : std::cout;
  if (config.format.value_or(Format::csv) == Format::json) {
    write_json(out, header, table);
  } else {
    write_csv(out, header, table);
  }
  for (const auto &[key, value] : table.notes) {
    if (key == "verdict" && value != "pass") std::cerr << "verification failed\n";
  }
  return table.status;
}

}  // namespace

int main(int argc, char **argv) {
  using wgs::cli::Task;
  CLI::App app{"Exact reduced states and entanglement of long-range Ising evolved product states"};
  app.set_version_flag("--version", WGS_VERSION);
  app.require_subcommand(1);

  const std::map<Task, std::string> help = {
      {Task::correlations, "Q_max, concurrence and assistance bound against separation"},
      {Task::entropy_scan, "block entropy: exact, upper and lower bounds against L"},
      {Task::bounds_scan, "upper and lower entropy bounds over block sizes and sub-block lengths"},
      {Task::dynamics, "S_1..S_lmax, Q_max and Meyer-Wallach over a time grid"},
      {Task::graph_rank, "graph-state block entropy from the GF(2) rank of the cut matrix"},
      {Task::verify, "compare the engine with the statevector oracle on random instances"},
      {Task::mw, "Meyer-Wallach global entanglement"}};

  Flags flags;
  std::optional<Task> chosen;
  for (const auto &[task, text] : help) {
    auto *sub = app.add_subcommand(wgs::cli::task_name(task), text);
    add_flags(*sub, flags);
    sub->callback([&chosen, task = task] { chosen = task; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(*chosen, flags);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
