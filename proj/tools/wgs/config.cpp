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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>

#include "wgs/error.hpp"

namespace wgs::cli {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

const std::vector<std::string> &known_keys() {
  static const std::vector<std::string> keys = {
      "dimension", "extents", "boundary", "law", "alpha", "kappa", "lambda", "table",
      "disorder", "disorder_low", "disorder_high", "disorder_mean", "disorder_sigma",
      "disorder_seed", "t_over_pi", "input", "input_theta_over_pi", "input_phi_over_pi",
      "block_sizes", "block_start", "separations", "reference_site", "subblock", "radius",
      "max_subset", "block_sides", "lmax", "separation", "instances", "max_sites",
      "verify_subset", "tolerance", "mw_samples", "task", "output", "format", "seed", "threads"};
  return keys;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(trim(item));
  return parts;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
std::string join(const std::vector<T> &values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  return os.str();
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string &key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string &key, const std::string &what) const {
    const auto it = entries_.find(key);
    const std::string where = it != entries_.end() ? "line " + std::to_string(it->second.line) + ": " : "";
    throw Error(Errc::config, where + "key '" + key + "': " + what);
  }

  const std::string &raw(const std::string &key) const { return entries_.at(key).value; }

  double real_value(const std::string &key, const std::string &text) const {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const double num = real_value(key, trim(text.substr(0, slash)));
      const double den = real_value(key, trim(text.substr(slash + 1)));
      if (den == 0.0) fail(key, "division by zero in '" + text + "'");
      return num / den;
    }
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) fail(key, "expected a number, got '" + text + "'");
    return v;
  }

  std::size_t count_value(const std::string &key, const std::string &text) const {
    std::size_t v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
      fail(key, "expected a non-negative integer, got '" + text + "'");
    }
    return v;
  }

  double real(const std::string &key) const { return real_value(key, raw(key)); }
  std::size_t count(const std::string &key) const { return count_value(key, raw(key)); }

  std::uint64_t u64(const std::string &key) const {
    std::uint64_t v = 0;
    const auto &text = raw(key);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail(key, "expected an unsigned integer");
    return v;
  }

  std::vector<std::size_t> counts(const std::string &key) const {
    std::vector<std::size_t> out;
    for (const auto &part : split(raw(key), ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos) {
        out.push_back(count_value(key, part));
        continue;
      }
      const auto lo = count_value(key, trim(part.substr(0, colon)));
      const auto hi = count_value(key, trim(part.substr(colon + 1)));
      if (hi < lo) fail(key, "range '" + part + "' runs backwards");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) fail(key, "empty list");
    return out;
  }

  std::vector<double> reals(const std::string &key) const {
    std::vector<double> out;
    for (const auto &part : split(raw(key), ',')) {
      const auto fields = split(part, ':');
      if (fields.size() == 1) {
        out.push_back(real_value(key, fields[0]));
      } else if (fields.size() == 3) {
        const double lo = real_value(key, fields[0]);
        const double hi = real_value(key, fields[1]);
        const auto n = count_value(key, fields[2]);
        if (n < 2) fail(key, "grid '" + part + "' needs at least two points");
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
      } else {
        fail(key, "expected a number or start:stop:count, got '" + part + "'");
      }
    }
    if (out.empty()) fail(key, "empty list");
    return out;
  }

  std::string word(const std::string &key, std::initializer_list<const char *> allowed) const {
    const auto v = lower(raw(key));
    for (const char *a : allowed) {
      if (v == a) return v;
    }
    std::string list;
    for (const char *a : allowed) list += std::string(list.empty() ? "" : "|") + a;
    fail(key, "expected one of " + list + ", got '" + raw(key) + "'");
  }

 private:
  std::map<std::string, Entry> entries_;
};

Boundary parse_boundary(const Reader &r, const std::string &text) {
  const auto v = lower(text);
  if (v == "open") return Boundary::open;
  if (v == "periodic") return Boundary::periodic;
  r.fail("boundary", "expected open or periodic, got '" + text + "'");
}

}  // namespace

const char *task_name(Task task) {
  switch (task) {
    case Task::correlations: return "correlations";
    case Task::entropy_scan: return "entropy-scan";
    case Task::bounds_scan: return "bounds-scan";
    case Task::dynamics: return "dynamics";
    case Task::graph_rank: return "graph-rank";
    case Task::verify: return "verify";
    case Task::mw: return "mw";
  }
  return "?";
}

std::optional<Task> parse_task(const std::string &name) {
  for (auto t : {Task::correlations, Task::entropy_scan, Task::bounds_scan, Task::dynamics,
                 Task::graph_rank, Task::verify, Task::mw}) {
    if (name == task_name(t)) return t;
  }
  return std::nullopt;
}

ExperimentConfig parse_config(std::istream &in) {
  std::map<std::string, Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::config, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = lower(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    const auto &keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(Errc::config, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (value.empty()) {
      throw Error(Errc::config, "line " + std::to_string(line_no) + ": key '" + key + "' has no value");
    }
    if (entries.count(key)) {
      throw Error(Errc::config, "line " + std::to_string(line_no) + ": key '" + key + "' repeated (first on line " +
                                    std::to_string(entries[key].line) + ")");
    }
    entries[key] = Entry{value, line_no};
  }

  const Reader r(std::move(entries));
  ExperimentConfig c;

  if (r.has("extents")) c.extents = r.counts("extents");
  if (std::any_of(c.extents.begin(), c.extents.end(), [](auto e) { return e == 0; })) {
    r.fail("extents", "extents must be positive");
  }
  if (r.has("dimension") && r.count("dimension") != c.extents.size()) {
    r.fail("dimension", "does not match the number of extents (" + std::to_string(c.extents.size()) + ")");
  }
  if (r.has("boundary")) {
    c.boundary.clear();
    for (const auto &b : split(r.raw("boundary"), ',')) c.boundary.push_back(parse_boundary(r, b));
    if (c.boundary.size() != 1 && c.boundary.size() != c.extents.size()) {
      r.fail("boundary", "give one boundary or one per axis");
    }
  }

  if (r.has("law")) c.law = r.word("law", {"power", "exponential", "cutoff", "table"});
  const std::map<std::string, std::string> parameter_of = {
      {"power", "alpha"}, {"exponential", "kappa"}, {"cutoff", "lambda"}, {"table", ""}};
  for (const auto &[law, key] : parameter_of) {
    if (!key.empty() && law != c.law && r.has(key)) {
      r.fail(key, "does not apply to law '" + c.law + "'");
    }
  }
  const auto &param = parameter_of.at(c.law);
  if (c.law == "table") {
    if (!r.has("table")) throw Error(Errc::config, "key 'table': required when law = table");
    for (const auto &pair : split(r.raw("table"), ',')) {
      const auto fields = split(pair, ':');
      if (fields.size() != 2) r.fail("table", "expected distance:strength pairs, got '" + pair + "'");
      c.table.emplace_back(r.real_value("table", fields[0]), r.real_value("table", fields[1]));
    }
    c.law_values = {0.0};
  } else {
    if (r.has("table")) r.fail("table", "only applies to law = table");
    c.law_values = r.has(param) ? r.reals(param) : std::vector<double>{c.law == "cutoff" ? 1.0 : c.law == "exponential" ? 1.0 : 3.0};
  }

  if (r.has("disorder")) c.disorder = r.word("disorder", {"none", "uniform", "gaussian"});
  const bool uniform = c.disorder == "uniform", gaussian = c.disorder == "gaussian";
  for (const char *key : {"disorder_low", "disorder_high"}) {
    if (r.has(key) && !uniform) r.fail(key, "only applies to disorder = uniform");
  }
  for (const char *key : {"disorder_mean", "disorder_sigma"}) {
    if (r.has(key) && !gaussian) r.fail(key, "only applies to disorder = gaussian");
  }
  if (uniform) {
    c.disorder_a = r.has("disorder_low") ? r.real("disorder_low") : 0.0;
    c.disorder_b = r.has("disorder_high") ? r.real("disorder_high") : 1.0;
    if (!(c.disorder_b >= c.disorder_a)) r.fail("disorder_high", "must not be below disorder_low");
  } else if (gaussian) {
    c.disorder_a = r.has("disorder_mean") ? r.real("disorder_mean") : 1.0;
    c.disorder_b = r.has("disorder_sigma") ? r.real("disorder_sigma") : 0.1;
    if (!(c.disorder_b >= 0)) r.fail("disorder_sigma", "must be non-negative");
  }
  if (r.has("disorder_seed")) c.disorder_seed = r.u64("disorder_seed");

  if (r.has("t_over_pi")) c.t_over_pi = r.reals("t_over_pi");
  for (std::size_t i = 0; i < c.t_over_pi.size(); ++i) {
    if (!(c.t_over_pi[i] >= 0)) r.fail("t_over_pi", "times must be non-negative");
    if (i > 0 && !(c.t_over_pi[i] > c.t_over_pi[i - 1])) r.fail("t_over_pi", "time grid must be strictly increasing");
  }

  if (r.has("input")) c.input = r.word("input", {"plus", "bloch", "random"});
  for (const char *key : {"input_theta_over_pi", "input_phi_over_pi"}) {
    if (r.has(key) && c.input != "bloch") r.fail(key, "only applies to input = bloch");
  }
  if (r.has("input_theta_over_pi")) c.input_theta_over_pi = r.real("input_theta_over_pi");
  if (r.has("input_phi_over_pi")) c.input_phi_over_pi = r.real("input_phi_over_pi");

  if (r.has("block_sizes")) c.block_sizes = r.counts("block_sizes");
  if (r.has("block_start")) c.block_start = r.count("block_start");
  if (r.has("separations")) c.separations = r.counts("separations");
  if (r.has("reference_site")) c.reference_site = r.count("reference_site");
  if (r.has("subblock")) c.subblocks = r.counts("subblock");
  if (r.has("radius")) c.radius = r.real("radius");
  if (r.has("max_subset")) c.max_subset = r.count("max_subset");
  if (r.has("block_sides")) c.block_sides = r.counts("block_sides");
  if (r.has("lmax")) c.lmax = r.count("lmax");
  if (r.has("separation")) c.separation = r.count("separation");
  if (r.has("instances")) c.instances = r.count("instances");
  if (r.has("max_sites")) c.max_sites = r.count("max_sites");
  if (r.has("verify_subset")) c.verify_subset = r.count("verify_subset");
  if (r.has("tolerance")) c.tolerance = r.real("tolerance");
  if (r.has("mw_samples")) c.mw_samples = r.count("mw_samples");
  if (r.has("task")) {
    c.task = parse_task(lower(r.raw("task")));
    if (!c.task) r.fail("task", "unknown task '" + r.raw("task") + "'");
  }
  if (r.has("output")) c.output = r.raw("output");
  if (r.has("format")) c.format = r.word("format", {"csv", "json"}) == "csv" ? Format::csv : Format::json;
  if (r.has("seed")) c.seed = r.u64("seed");
  if (r.has("threads")) c.threads = static_cast<unsigned>(r.count("threads"));

  if (c.radius < 0) r.fail("radius", "must be non-negative");
  if (c.max_subset == 0) r.fail("max_subset", "must be positive");
  if (std::find(c.subblocks.begin(), c.subblocks.end(), 0) != c.subblocks.end()) r.fail("subblock", "must be positive");
  if (std::find(c.block_sizes.begin(), c.block_sizes.end(), 0) != c.block_sizes.end()) {
    r.fail("block_sizes", "must be positive");
  }
  if (std::find(c.separations.begin(), c.separations.end(), 0) != c.separations.end()) {
    r.fail("separations", "must be positive");
  }
  return c;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, "cannot open config file '" + path + "'");
  return parse_config(in);
}

std::size_t ExperimentConfig::sites() const {
  std::size_t n = 1;
  for (auto e : extents) n *= e;
  return n;
}

Lattice ExperimentConfig::lattice() const {
  try {
    return Lattice(extents, boundary);
  } catch (const Error &e) {
    throw Error(Errc::config, std::string("key 'extents': ") + e.what());
  }
}

std::string ExperimentConfig::law_parameter_name() const {
  if (law == "power") return "alpha";
  if (law == "exponential") return "kappa";
  if (law == "cutoff") return "lambda";
  return "";
}

CouplingLaw ExperimentConfig::coupling_law(double parameter) const {
  BaseLaw base = PowerLaw{parameter};
  if (law == "exponential") base = ExponentialLaw{parameter};
  if (law == "cutoff") base = CutoffLaw{parameter};
  if (law == "table") base = TableLaw{table};
  std::optional<Disorder> d;
  if (disorder != "none") {
    d = Disorder{disorder == "uniform" ? Disorder::Kind::uniform : Disorder::Kind::gaussian, disorder_a,
                 disorder_b, disorder_seed.value_or(seed)};
  }
  try {
    return CouplingLaw(base, d);
  } catch (const Error &e) {
    throw Error(Errc::config, "key '" + (law == "table" ? std::string("table") : law_parameter_name()) +
                                  "': " + e.what());
  }
}

ProductInput ExperimentConfig::product_input() const {
  const std::size_t n = sites();
  if (input == "bloch") {
    return ProductInput::bloch(n, input_theta_over_pi * std::numbers::pi, input_phi_over_pi * std::numbers::pi);
  }
  if (input == "random") {
    std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
    return ProductInput::random(n, rng);
  }
  return ProductInput::plus(n);
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::settings() const {
  std::vector<std::pair<std::string, std::string>> s;
  s.emplace_back("extents", join(extents));
  std::vector<std::string> b;
  for (auto x : boundary) b.push_back(x == Boundary::open ? "open" : "periodic");
  s.emplace_back("boundary", join(b));
  s.emplace_back("law", law);
  if (law == "table") {
    std::vector<std::string> t;
    for (const auto &[r, f] : table) t.push_back(format_double(r) + ":" + format_double(f));
    s.emplace_back("table", join(t));
  } else {
    s.emplace_back(law_parameter_name(), join(law_values));
  }
  s.emplace_back("disorder", disorder);
  if (disorder == "uniform") {
    s.emplace_back("disorder_low", format_double(disorder_a));
    s.emplace_back("disorder_high", format_double(disorder_b));
  } else if (disorder == "gaussian") {
    s.emplace_back("disorder_mean", format_double(disorder_a));
    s.emplace_back("disorder_sigma", format_double(disorder_b));
  }
  if (disorder != "none") s.emplace_back("disorder_seed", std::to_string(disorder_seed.value_or(seed)));
  s.emplace_back("t_over_pi", join(t_over_pi));
  s.emplace_back("input", input);
  if (input == "bloch") {
    s.emplace_back("input_theta_over_pi", format_double(input_theta_over_pi));
    s.emplace_back("input_phi_over_pi", format_double(input_phi_over_pi));
  }
  s.emplace_back("block_sizes", join(block_sizes));
  if (block_start) s.emplace_back("block_start", std::to_string(*block_start));
  s.emplace_back("separations", join(separations));
  if (reference_site) s.emplace_back("reference_site", std::to_string(*reference_site));
  s.emplace_back("subblock", join(subblocks));
  s.emplace_back("radius", format_double(radius));
  s.emplace_back("max_subset", std::to_string(max_subset));
  s.emplace_back("block_sides", join(block_sides));
  s.emplace_back("lmax", std::to_string(lmax));
  s.emplace_back("separation", std::to_string(separation));
  s.emplace_back("instances", std::to_string(instances));
  s.emplace_back("max_sites", std::to_string(max_sites));
  s.emplace_back("verify_subset", std::to_string(verify_subset));
  s.emplace_back("tolerance", format_double(tolerance));
  s.emplace_back("mw_samples", std::to_string(mw_samples));
  s.emplace_back("seed", std::to_string(seed));
  return s;
}

void validate(const ExperimentConfig &c, Task task) {
  if (c.task && *c.task != task) {
    throw Error(Errc::config, std::string("key 'task': config is for '") + task_name(*c.task) +
                                  "' but the '" + task_name(task) + "' subcommand was run");
  }
  const auto fail = [](const std::string &key, const std::string &what) {
    throw Error(Errc::config, "key '" + key + "': " + what);
  };
  if (task == Task::verify) {
    if (c.max_sites < 2 || c.max_sites > 20) fail("max_sites", "must be within [2, 20]");
    if (c.verify_subset == 0 || c.verify_subset > c.max_subset) fail("verify_subset", "must be within [1, max_subset]");
    if (c.instances == 0) fail("instances", "must be positive");
    return;
  }
  const std::size_t n = c.sites();
  if (n < 2) fail("extents", "need at least two sites");
  if (task != Task::dynamics && c.t_over_pi.size() != 1) {
    fail("t_over_pi", std::string("a time grid only applies to the dynamics task, not ") + task_name(task));
  }
  if (task == Task::entropy_scan || task == Task::bounds_scan) {
    for (auto l : c.block_sizes) {
      if (l > n) fail("block_sizes", "block of " + std::to_string(l) + " sites exceeds N = " + std::to_string(n));
      if (c.block_start && *c.block_start + l > n) fail("block_start", "block runs past the last site");
    }
  }
  if (task == Task::correlations) {
    const auto max_sep = *std::max_element(c.separations.begin(), c.separations.end());
    const auto k = c.reference_site.value_or(n > max_sep ? (n - 1 - max_sep) / 2 : 0);
    if (k + max_sep >= n) fail("separations", "reference site plus separation leaves the lattice");
  }
  if (task == Task::dynamics) {
    if (c.lmax == 0 || c.lmax > c.max_subset || c.lmax > n) fail("lmax", "must be within [1, min(max_subset, N)]");
    if (c.separation == 0 || c.separation >= n) fail("separation", "must be within [1, N)");
  }
  if (task == Task::graph_rank) {
    if (c.law == "power" || c.law == "exponential") fail("law", "graph-rank needs a cutoff or table law");
    for (auto a : c.block_sides) {
      for (auto e : c.extents) {
        if (a == 0 || a > e) fail("block_sides", "side " + std::to_string(a) + " does not fit the lattice");
      }
    }
  }
}

}  // namespace wgs::cli
