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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "output.hpp"
#include "tasks.hpp"
#include "test_support.hpp"
#include "wgs/measures.hpp"
#include "wgs/rdm_engine.hpp"

namespace wgs::cli {
namespace {

ExperimentConfig parse(const std::string &text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string config_error(const std::string &text) {
  try {
    parse(text);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::config);
    return e.what();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {};
}

double number(const Cell &c) {
  if (const auto *d = std::get_if<double>(&c)) return *d;
  return static_cast<double>(std::get<std::int64_t>(c));
}

TEST(Config, DefaultsAndComments) {
  const auto c = parse("# header\n\nextents = 50   # chain\n");
  EXPECT_EQ(c.extents, std::vector<std::size_t>{50});
  EXPECT_EQ(c.law, "power");
  EXPECT_EQ(c.law_values, std::vector<double>{3.0});
  EXPECT_EQ(c.sites(), 50U);
}

TEST(Config, ListsRangesGridsAndFractions) {
  const auto c = parse(
      "extents = 8, 6\nboundary = open, periodic\nalpha = 1/3, 3\n"
      "t_over_pi = 0:1:5\nblock_sizes = 1:3, 10\n");
  EXPECT_EQ(c.extents, (std::vector<std::size_t>{8, 6}));
  EXPECT_EQ(c.boundary, (std::vector<Boundary>{Boundary::open, Boundary::periodic}));
  EXPECT_DOUBLE_EQ(c.law_values[0], 1.0 / 3.0);
  ASSERT_EQ(c.t_over_pi.size(), 5U);
  EXPECT_EQ(c.t_over_pi.front(), 0.0);
  EXPECT_EQ(c.t_over_pi.back(), 1.0);
  EXPECT_DOUBLE_EQ(c.t_over_pi[1], 0.25);
  EXPECT_EQ(c.block_sizes, (std::vector<std::size_t>{1, 2, 3, 10}));
}

TEST(Config, TableAndDisorder) {
  const auto c = parse("law = table\ntable = 1:1, 2:0.5\ndisorder = uniform\ndisorder_low = 0\ndisorder_high = 2\n");
  ASSERT_EQ(c.table.size(), 2U);
  EXPECT_EQ(c.table[1], std::make_pair(2.0, 0.5));
  EXPECT_EQ(c.disorder_b, 2.0);
  EXPECT_NO_THROW(c.coupling_law(0.0));
}

TEST(Config, DiagnosticsCarryLineAndKey) {
  EXPECT_NE(config_error("extents = 10\nfoo = 1\n").find("line 2: unknown key 'foo'"), std::string::npos);
  EXPECT_NE(config_error("alpha = 1\n\nalpha = 2\n").find("line 3: key 'alpha' repeated"), std::string::npos);
  EXPECT_NE(config_error("extents = ten\n").find("line 1: key 'extents'"), std::string::npos);
  EXPECT_NE(config_error("extents = 10\njust text\n").find("line 2"), std::string::npos);
  EXPECT_NE(config_error("law = power\nkappa = 1\n").find("key 'kappa'"), std::string::npos);
  EXPECT_NE(config_error("t_over_pi = 0.5, 0.2\n").find("strictly increasing"), std::string::npos);
  EXPECT_NE(config_error("t_over_pi = 0.2, 0.2\n").find("strictly increasing"), std::string::npos);
  EXPECT_NE(config_error("alpha = 1/0\n").find("division by zero"), std::string::npos);
  EXPECT_NE(config_error("block_sizes = 5:2\n").find("backwards"), std::string::npos);
  EXPECT_NE(config_error("law = table\n").find("'table'"), std::string::npos);
  EXPECT_NE(config_error("input = plus\ninput_theta_over_pi = 0.3\n").find("bloch"), std::string::npos);
  EXPECT_NE(config_error("extents = 4, 4\ndimension = 3\n").find("dimension"), std::string::npos);
  EXPECT_NE(config_error("format = xml\n").find("format"), std::string::npos);
  EXPECT_NE(config_error("task = sweep\n").find("unknown task"), std::string::npos);
}

TEST(Config, InvalidLawParameterIsConfigError) {
  const auto c = parse("alpha = -1\n");
  testing::expect_errc(Errc::config, [&] { (void)c.coupling_law(c.law_values[0]); });
}

TEST(Validate, TaskParameterMismatch) {
  auto c = parse("extents = 20\nblock_sizes = 1:30\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::entropy_scan); });
  c = parse("extents = 20\nt_over_pi = 0:1:3\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::entropy_scan); });
  EXPECT_NO_THROW(validate(c, Task::dynamics));
  c = parse("extents = 20\nseparations = 25\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::correlations); });
  c = parse("extents = 20\nblock_sizes = 5\nblock_start = 18\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::entropy_scan); });
  c = parse("task = mw\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::verify); });
  c = parse("extents = 10, 10\n");
  testing::expect_errc(Errc::config, [&] { validate(c, Task::graph_rank); });
}

TEST(Tasks, EntropyScanRowsAndExactColumn) {
  const auto c = parse("extents = 300\nalpha = 1/3, 3\nblock_sizes = 1:3, 14\nsubblock = 4\nradius = 20\n");
  const auto t = run_task(Task::entropy_scan, c);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"alpha", "L", "s_exact", "s_upper", "s_lower"}));
  ASSERT_EQ(t.rows.size(), 8U);
  for (const auto &row : t.rows) {
    const bool fits = number(row[1]) <= 10;
    EXPECT_EQ(std::holds_alternative<std::monostate>(row[2]), !fits);
    if (fits) {
      EXPECT_LE(number(row[4]), number(row[2]) + 1e-10);
      EXPECT_LE(number(row[2]), number(row[3]) + 1e-10);
    }
  }
}

TEST(Tasks, BoundsScanCoversEveryPair) {
  const auto c = parse("extents = 100\nblock_sizes = 4, 8\nsubblock = 2, 4\n");
  const auto t = run_task(Task::bounds_scan, c);
  ASSERT_EQ(t.rows.size(), 4U);
  EXPECT_EQ(number(t.rows[1][1]), 4.0);
  for (const auto &row : t.rows) EXPECT_LE(number(row[4]), number(row[2]) + 1e-10);
}

TEST(Tasks, CorrelationsMatchLibrary) {
  const auto c = parse("extents = 40\nalpha = 1\nseparations = 1, 3\nreference_site = 10\n");
  const auto t = run_task(Task::correlations, c);
  ASSERT_EQ(t.rows.size(), 2U);
  const PhaseProfile profile(c.lattice(), c.coupling_law(1.0), 0.3 * std::numbers::pi);
  const auto rho = reduced_density(profile, ProductInput::plus(40), SiteSubset({10, 13}, 40), true);
  EXPECT_EQ(number(t.rows[1][1]), max_correlation(correlation_matrix(rho)));
  EXPECT_EQ(number(t.rows[1][3]), concurrence_of_assistance(rho));
}

TEST(Tasks, DynamicsShape) {
  const auto c = parse("extents = 60\nt_over_pi = 0:1:4\nlmax = 3\n");
  const auto t = run_task(Task::dynamics, c);
  EXPECT_EQ(t.columns.size(), 1 + 3 + 2U);
  ASSERT_EQ(t.rows.size(), 4U);
  for (std::size_t j = 1; j < 6; ++j) EXPECT_NEAR(number(t.rows[0][j]), 0.0, 1e-12);
}

TEST(Tasks, GraphRankMatchesClosedForm) {
  const auto c = parse("extents = 10, 10\nlaw = cutoff\nlambda = 1\nt_over_pi = 1\nblock_sides = 2:4\n");
  const auto t = run_task(Task::graph_rank, c);
  ASSERT_EQ(t.rows.size(), 3U);
  for (const auto &row : t.rows) EXPECT_EQ(number(row[2]), number(row[3]));
}

TEST(Tasks, NonGraphPhasesRejected) {
  const auto c = parse("extents = 10\nlaw = cutoff\nlambda = 1\nt_over_pi = 0.5\nblock_sides = 2\n");
  testing::expect_errc(Errc::not_a_graph_state, [&] { run_task(Task::graph_rank, c); });
}

TEST(Tasks, VerifyStatus) {
  auto c = parse("instances = 10\nmax_sites = 8\nverify_subset = 4\n");
  auto t = run_task(Task::verify, c);
  EXPECT_EQ(t.rows.size(), 10U);
  EXPECT_EQ(t.status, 0);
  c.tolerance = 0.0;
  EXPECT_EQ(run_task(Task::verify, c).status, 2);
}

TEST(Tasks, RerunIsReproducibleAcrossThreadCounts) {
  auto c = parse("extents = 120\nalpha = 0.5, 2\nblock_sizes = 1:6\ninput = random\nseed = 7\n");
  c.threads = 1;
  const auto a = run_task(Task::entropy_scan, c);
  c.threads = 4;
  const auto b = run_task(Task::entropy_scan, c);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      EXPECT_NEAR(number(a.rows[i][j]), number(b.rows[i][j]), 1e-9);
    }
  }
}

TEST(Output, CsvHeaderAndRows) {
  Table t;
  t.columns = {"x", "y", "name"};
  t.rows = {{std::int64_t{1}, 0.5, std::string("a,b")}, {std::int64_t{2}, Cell{}, std::string("c")}};
  RunHeader h{"9.9", Task::mw, 42, 3, 1.5, {{"extents", "10"}}};
  std::ostringstream os;
  write_csv(os, h, t);
  const auto s = os.str();
  EXPECT_NE(s.find("# wgs 9.9\n"), std::string::npos);
  EXPECT_NE(s.find("# seed = 42\n"), std::string::npos);
  EXPECT_NE(s.find("# wall_time_s = 1.5\n"), std::string::npos);
  EXPECT_NE(s.find("# config.extents = 10\n"), std::string::npos);
  EXPECT_NE(s.find("x,y,name\n1,0.5,\"a,b\"\n2,,c\n"), std::string::npos);
}

TEST(Output, JsonMirrorsCsv) {
  Table t;
  t.columns = {"x", "y"};
  t.rows = {{std::int64_t{1}, 0.25}, {std::int64_t{2}, Cell{}}};
  RunHeader h{"9.9", Task::dynamics, 5, 1, 0.1, {{"law", "power"}}};
  std::ostringstream os;
  write_json(os, h, t);
  const auto doc = nlohmann::json::parse(os.str());
  EXPECT_EQ(doc["header"]["seed"], 5);
  EXPECT_EQ(doc["header"]["task"], "dynamics");
  EXPECT_EQ(doc["header"]["config"]["law"], "power");
  EXPECT_EQ(doc["rows"].size(), 2U);
  EXPECT_EQ(doc["rows"][0][1], 0.25);
  EXPECT_TRUE(doc["rows"][1][1].is_null());
}

// The executable's exit codes: 0 success, 1 config error, 2 verification failure.
class Executable : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "wgs_cli_test";

  void SetUp() override { std::filesystem::create_directories(dir); }

  std::filesystem::path write(const std::string &name, const std::string &text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p;
  }

  static int run(const std::string &args) {
    const std::string cmd = std::string(WGS_EXE) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }
};

TEST_F(Executable, ExitCodes) {
  const auto good = write("good.cfg", "extents = 30\nblock_sizes = 1:2\n");
  const auto bad = write("bad.cfg", "extents = 30\nnope = 1\n");
  const auto strict = write("strict.cfg", "instances = 3\nmax_sites = 6\nverify_subset = 3\ntolerance = 0\n");
  EXPECT_EQ(run("entropy-scan --config " + good.string()), 0);
  EXPECT_EQ(run("entropy-scan --config " + bad.string()), 1);
  EXPECT_EQ(run("verify --config " + strict.string()), 2);
  EXPECT_EQ(run("no-such-task"), 1);
  EXPECT_EQ(run("mw --format yaml"), 1);
}

TEST_F(Executable, OutputFileIsDeterministic) {
  const auto cfg = write("det.cfg", "extents = 80\nalpha = 1/3, 3\nseparations = 1:3\n");
  const auto a = dir / "a.json", b = dir / "b.json";
  ASSERT_EQ(run("correlations -c " + cfg.string() + " -f json -j 1 -s 3 -o " + a.string()), 0);
  ASSERT_EQ(run("correlations -c " + cfg.string() + " -f json -j 3 -s 3 -o " + b.string()), 0);
  const auto ja = nlohmann::json::parse(std::ifstream(a));
  const auto jb = nlohmann::json::parse(std::ifstream(b));
  EXPECT_EQ(ja["header"]["seed"], 3);
  EXPECT_EQ(ja["rows"].size(), 6U);
  EXPECT_EQ(ja["rows"], jb["rows"]);
}

}  // namespace
}  // namespace wgs::cli
