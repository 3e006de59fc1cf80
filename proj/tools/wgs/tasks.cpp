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

#include "tasks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wgs/error.hpp"
#include "wgs/graphstate.hpp"
#include "wgs/measures.hpp"
#include "wgs/parallel.hpp"
#include "wgs/rdm_engine.hpp"
#include "wgs/verification.hpp"

namespace wgs::cli {

namespace {

using Row = std::vector<Cell>;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// Outer grid gets the workers; the engine call inside each point runs single
// threaded unless there is only one point. The engine's chunking makes its
// results independent of the thread count either way.
EngineOptions engine_options(const ExperimentConfig &c, std::size_t grid_points) {
  EngineOptions o;
  o.threads = grid_points > 1 ? 1U : c.threads;
  o.max_subset = c.max_subset;
  return o;
}

template <class Fn>
std::vector<Row> run_grid(std::size_t points, unsigned threads, Fn &&fn) {
  std::vector<Row> rows(points);
  parallel_for(points, threads, [&](std::size_t i) { rows[i] = fn(i); });
  return rows;
}

// Prefixes rows with the law parameter when more than one value is swept.
struct Sweep {
  const ExperimentConfig &config;
  bool labelled() const { return config.law_values.size() > 1; }

  std::vector<std::string> columns(std::vector<std::string> rest) const {
    if (labelled()) rest.insert(rest.begin(), config.law_parameter_name());
    return rest;
  }
  Row row(std::size_t law_index, Row rest) const {
    if (labelled()) rest.insert(rest.begin(), config.law_values[law_index]);
    return rest;
  }
};

Site centered_start(std::size_t n, std::size_t length) { return (n - length) / 2; }

PhaseProfile make_profile(const ExperimentConfig &c, const Lattice &lattice, std::size_t law_index,
                          double t_over_pi) {
  return PhaseProfile(lattice, c.coupling_law(c.law_values[law_index]), t_over_pi * std::numbers::pi);
}

Table correlations(const ExperimentConfig &c) {
  const auto lattice = c.lattice();
  const auto input = c.product_input();
  const std::size_t n = lattice.size();
  const auto max_sep = *std::max_element(c.separations.begin(), c.separations.end());
  const Site k = c.reference_site.value_or((n - 1 - max_sep) / 2);
  const std::size_t per_law = c.separations.size();
  const std::size_t points = c.law_values.size() * per_law;
  const auto opts = engine_options(c, points);
  const Sweep sweep{c};

  Table t;
  t.columns = sweep.columns({"separation", "q_max", "concurrence", "assistance_upper"});
  t.rows = run_grid(points, c.threads, [&](std::size_t i) {
    const auto law = i / per_law;
    const auto s = c.separations[i % per_law];
    const auto profile = make_profile(c, lattice, law, c.t_over_pi.front());
    const auto rho = reduced_density(profile, input, SiteSubset({k, k + s}, n), true, opts);
    return sweep.row(law, {as_int(s), max_correlation(correlation_matrix(rho)), concurrence(rho),
                           concurrence_of_assistance(rho)});
  });
  t.notes.emplace_back("reference_site", std::to_string(k));
  return t;
}

Table entropy_scan(const ExperimentConfig &c, bool all_subblocks) {
  const auto lattice = c.lattice();
  const auto input = c.product_input();
  const std::size_t n = lattice.size();
  const std::vector<std::size_t> ms =
      all_subblocks ? c.subblocks : std::vector<std::size_t>{c.subblocks.front()};
  const std::size_t per_law = c.block_sizes.size() * ms.size();
  const std::size_t points = c.law_values.size() * per_law;
  const auto opts = engine_options(c, points);
  const Sweep sweep{c};

  Table t;
  t.columns = all_subblocks ? sweep.columns({"L", "m", "s_upper", "s_lower", "s_exact"})
                            : sweep.columns({"L", "s_exact", "s_upper", "s_lower"});
  t.rows = run_grid(points, c.threads, [&](std::size_t i) {
    const auto law = i / per_law;
    const auto length = c.block_sizes[(i % per_law) / ms.size()];
    const auto m = ms[i % ms.size()];
    const auto profile = make_profile(c, lattice, law, c.t_over_pi.front());
    const Block block{c.block_start.value_or(centered_start(n, length)), length};
    const bool fits = length <= c.max_subset;
    const Cell exact = fits ? Cell(block_entropy(profile, input, block, opts)) : Cell();
    const Cell lower = fits ? Cell(block_entropy_lower(profile, input, block, c.radius, opts)) : Cell();
    const double upper = block_entropy_upper(profile, input, block, m, opts);
    if (all_subblocks) return sweep.row(law, {as_int(length), as_int(m), upper, lower, exact});
    return sweep.row(law, {as_int(length), exact, upper, lower});
  });
  t.notes.emplace_back("subblock", std::to_string(ms.front()));
  std::ostringstream radius;
  radius << c.radius;
  t.notes.emplace_back("radius", radius.str());
  return t;
}

Table dynamics(const ExperimentConfig &c) {
  const auto lattice = c.lattice();
  const auto input = c.product_input();
  const std::size_t n = lattice.size();
  const std::size_t per_law = c.t_over_pi.size();
  const std::size_t points = c.law_values.size() * per_law;
  const auto opts = engine_options(c, points);
  const Sweep sweep{c};
  const Site k = centered_start(n, c.separation + 1);

  std::vector<std::string> cols{"t_over_pi"};
  for (std::size_t l = 1; l <= c.lmax; ++l) cols.push_back("S_" + std::to_string(l));
  cols.insert(cols.end(), {"q_max", "e_mw"});

  Table t;
  t.columns = sweep.columns(cols);
  t.rows = run_grid(points, c.threads, [&](std::size_t i) {
    const auto law = i / per_law;
    const double tau = c.t_over_pi[i % per_law];
    const auto profile = make_profile(c, lattice, law, tau);
    Row row{tau};
    for (std::size_t l = 1; l <= c.lmax; ++l) {
      row.emplace_back(block_entropy(profile, input, Block{centered_start(n, l), l}, opts));
    }
    const auto rho = reduced_density(profile, input, SiteSubset({k, k + c.separation}, n), true, opts);
    row.emplace_back(max_correlation(correlation_matrix(rho)));
    const auto mw = c.mw_samples > 0 ? meyer_wallach_sampled(profile, input, c.mw_samples, c.seed, opts)
                                     : meyer_wallach(profile, input, opts);
    row.emplace_back(mw.value);
    return sweep.row(law, std::move(row));
  });
  t.notes.emplace_back("q_pair", std::to_string(k) + " " + std::to_string(k + c.separation));
  return t;
}

// Closed form applies to an integer cutoff with at least lambda sites of
// margin around the cube on every axis.
Cell analytic_cell(const ExperimentConfig &c, const Lattice &lattice, std::size_t law,
                   std::size_t side) {
  if (c.law != "cutoff" || c.disorder != "none") return {};
  const double lambda = c.law_values[law];
  if (lambda != std::floor(lambda) || lambda < 1) return {};
  const auto lam = static_cast<std::size_t>(lambda);
  for (auto e : lattice.extents()) {
    const auto before = (e - side) / 2;
    const auto after = e - side - before;
    if (before < lam || after < lam) return {};
  }
  return as_int(analytic_block_entropy(lattice.dimension(), side, lam));
}

Table graph_rank(const ExperimentConfig &c) {
  const auto lattice = c.lattice();
  const std::size_t n = lattice.size();
  const std::size_t per_law = c.block_sides.size();
  const std::size_t points = c.law_values.size() * per_law;
  const Sweep sweep{c};

  Table t;
  t.columns = sweep.columns({"a", "L", "rank_entropy", "analytic_entropy"});
  t.rows = run_grid(points, c.threads, [&](std::size_t i) {
    const auto law = i / per_law;
    const auto side = c.block_sides[i % per_law];
    const auto profile = make_profile(c, lattice, law, c.t_over_pi.front());
    const SiteSubset subset(centered_cube(lattice, side), n);
    return sweep.row(law, {as_int(side), as_int(subset.size()),
                           as_int(graph_block_entropy(profile, subset)),
                           analytic_cell(c, lattice, law, side)});
  });
  return t;
}

Table verify(const ExperimentConfig &c) {
  EngineOptions opts;
  opts.threads = c.threads;
  opts.max_subset = c.max_subset;
  const auto report = verify_against_oracle(c.instances, c.max_sites, c.verify_subset, c.seed, opts);
  Table t;
  t.columns = {"instance", "sites", "subset_size", "law", "t_over_pi", "trace_distance"};
  for (const auto &r : report.rows) {
    t.rows.push_back({as_int(r.index), as_int(r.sites), as_int(r.subset_size), r.law,
                      r.time / std::numbers::pi, r.trace_distance});
  }
  std::ostringstream os;
  os.precision(17);
  os << report.max_trace_distance;
  t.notes.emplace_back("max_trace_distance", os.str());
  const bool ok = report.max_trace_distance < c.tolerance;
  t.notes.emplace_back("verdict", ok ? "pass" : "fail");
  t.status = ok ? 0 : 2;
  return t;
}

Table mw(const ExperimentConfig &c) {
  const auto lattice = c.lattice();
  const auto input = c.product_input();
  const std::size_t points = c.law_values.size();
  const auto opts = engine_options(c, points);
  const Sweep sweep{c};
  Table t;
  t.columns = sweep.columns({"e_mw", "sites_used", "sampled"});
  t.rows = run_grid(points, c.threads, [&](std::size_t law) {
    const auto profile = make_profile(c, lattice, law, c.t_over_pi.front());
    const auto r = c.mw_samples > 0 ? meyer_wallach_sampled(profile, input, c.mw_samples, c.seed, opts)
                                    : meyer_wallach(profile, input, opts);
    return sweep.row(law, {r.value, as_int(r.sites_used), as_int(r.sampled ? 1 : 0)});
  });
  return t;
}

}  // namespace

Table run_task(Task task, const ExperimentConfig &config) {
  validate(config, task);
  switch (task) {
    case Task::correlations: return correlations(config);
    case Task::entropy_scan: return entropy_scan(config, false);
    case Task::bounds_scan: return entropy_scan(config, true);
    case Task::dynamics: return dynamics(config);
    case Task::graph_rank: return graph_rank(config);
    case Task::verify: return verify(config);
    case Task::mw: return mw(config);
  }
  throw Error(Errc::config, "unknown task");
}

}  // namespace wgs::cli
