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

#include "wgs/verification.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "wgs/error.hpp"
#include "wgs/oracle.hpp"
#include "wgs/parallel.hpp"

namespace wgs {

namespace {

Lattice random_lattice(std::mt19937_64 &rng, std::size_t max_sites) {
  std::uniform_int_distribution<int> shape(0, 3);
  const auto boundary = [&] {
    return std::bernoulli_distribution(0.5)(rng) ? Boundary::periodic : Boundary::open;
  };
  const int kind = max_sites >= 4 ? shape(rng) : 0;
  if (kind < 3) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, max_sites)(rng);
    return Lattice::chain(n, boundary());
  }
  const auto rows = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_sites / 2))(rng);
  const auto cols = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_sites / rows))(rng);
  return Lattice({rows, cols}, {boundary(), boundary()});
}

CouplingLaw random_law(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::optional<Disorder> disorder;
  if (u(rng) < 0.25) {
    const bool gaussian = u(rng) < 0.5;
    disorder = gaussian ? Disorder{Disorder::Kind::gaussian, 1.0, 0.5 * u(rng), rng()}
                        : Disorder{Disorder::Kind::uniform, 0.0, 2.0 * u(rng) + 0.1, rng()};
  }
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
    case 1:
      return CouplingLaw(PowerLaw{0.2 + 3.8 * u(rng)}, disorder);
    case 2:
      return CouplingLaw(ExponentialLaw{0.1 + 1.9 * u(rng)}, disorder);
    case 3:
      return CouplingLaw(CutoffLaw{0.5 + 3.5 * u(rng)}, disorder);
    default:
      return CouplingLaw(TableLaw{{{1.0, 4.0 * u(rng) - 2.0}, {2.0, 3.0 * u(rng)}, {std::sqrt(2.0), u(rng)}}},
                         disorder);
  }
}

}  // namespace

RandomInstance random_instance(std::mt19937_64 &rng, std::size_t max_sites,
                               std::size_t max_subset) {
  if (max_sites < 2 || max_subset == 0) {
    throw Error(Errc::invalid_argument, "random instances need at least two sites and |A| >= 1");
  }
  auto lattice = random_lattice(rng, max_sites);
  auto law = random_law(rng);
  const double t = std::uniform_real_distribution<double>(1e-3, std::numbers::pi)(rng);
  const std::size_t n = lattice.size();
  auto input = std::bernoulli_distribution(0.5)(rng) ? ProductInput::plus(n) : ProductInput::random(n, rng);

  std::vector<Site> sites(n);
  std::iota(sites.begin(), sites.end(), Site{0});
  std::shuffle(sites.begin(), sites.end(), rng);
  const auto a = std::uniform_int_distribution<std::size_t>(1, std::min(max_subset, n))(rng);
  sites.resize(a);
  return {PhaseProfile(std::move(lattice), std::move(law), t), std::move(input),
          SiteSubset(std::move(sites), n)};
}

VerificationReport verify_against_oracle(std::size_t count, std::size_t max_sites,
                                         std::size_t max_subset, std::uint64_t seed,
                                         const EngineOptions &options) {
  if (max_sites > oracle::kMaxSites) throw Error(Errc::too_large, "oracle limited to 20 sites");

  // Draw every instance up front so the stream does not depend on scheduling.
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> instances;
  instances.reserve(count);
  for (std::size_t i = 0; i < count; ++i) instances.push_back(random_instance(rng, max_sites, max_subset));

  VerificationReport report;
  report.rows.resize(count);
  EngineOptions inner = options;
  inner.threads = 1;
  parallel_for(count, options.threads, [&](std::size_t i) {
    const auto &inst = instances[i];
    const auto state = oracle::evolve(inst.profile, inst.input);
    const auto exact = oracle::partial_trace(state, inst.subset);
    const auto rho = reduced_density(inst.profile, inst.input, inst.subset, true, inner);

    // rho'_A is the marginal of the state evolved without the gates inside A.
    const std::size_t n = inst.profile.size();
    const auto stripped = reduced_density(inst.profile, inst.input, inst.subset, false, inner);
    const auto exact_stripped = [&] {
      Eigen::VectorXcd amps = state.amplitudes();
      const std::size_t dim = std::size_t{1} << n;
      for (std::size_t x = 0; x < dim; ++x) {
        double theta = 0.0;
        for (std::size_t i2 = 0; i2 < inst.subset.size(); ++i2) {
          for (std::size_t j2 = i2 + 1; j2 < inst.subset.size(); ++j2) {
            const Site a = inst.subset[i2], b = inst.subset[j2];
            if (((x >> (n - 1 - a)) & 1U) && ((x >> (n - 1 - b)) & 1U)) {
              theta += inst.profile.phase(a, b);
            }
          }
        }
        amps[static_cast<Eigen::Index>(x)] *= std::polar(1.0, theta);
      }
      return oracle::partial_trace(oracle::StateVector(n, std::move(amps)), inst.subset);
    }();

    auto &row = report.rows[i];
    row.index = i;
    row.sites = n;
    row.subset_size = inst.subset.size();
    row.law = inst.profile.law().describe();
    row.time = inst.profile.time();
    row.trace_distance = std::max(trace_distance(rho, exact), trace_distance(stripped, exact_stripped));
  });
  for (const auto &row : report.rows) {
    report.max_trace_distance = std::max(report.max_trace_distance, row.trace_distance);
  }
  return report;
}

}  // namespace wgs
