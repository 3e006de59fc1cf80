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

#ifndef WGS_VERIFICATION_HPP
#define WGS_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wgs/geometry.hpp"
#include "wgs/rdm_engine.hpp"
#include "wgs/state.hpp"

namespace wgs {

/// A randomly drawn (profile, input, subset) triple small enough for the
/// statevector oracle.
struct RandomInstance {
  PhaseProfile profile;
  ProductInput input;
  SiteSubset subset;
};

/// Draws chains, rings and small 2D lattices with power, exponential, cutoff,
/// table and disordered laws, t in (0, pi), |+> or random product inputs.
RandomInstance random_instance(std::mt19937_64 &rng, std::size_t max_sites,
                               std::size_t max_subset);

struct VerificationRow {
  std::size_t index = 0;
  std::size_t sites = 0;
  std::size_t subset_size = 0;
  std::string law;
  double time = 0.0;
  double trace_distance = 0.0;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  double max_trace_distance = 0.0;
};

/// Engine versus oracle partial trace on `count` random instances. Each
/// instance compares both rho'_A and rho_A and records the larger distance.
VerificationReport verify_against_oracle(std::size_t count, std::size_t max_sites,
                                         std::size_t max_subset, std::uint64_t seed,
                                         const EngineOptions &options = {});

}  // namespace wgs

#endif  // WGS_VERIFICATION_HPP
