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

#ifndef WGS_RDM_ENGINE_HPP
#define WGS_RDM_ENGINE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wgs/geometry.hpp"
#include "wgs/state.hpp"

namespace wgs {

inline constexpr std::size_t kDefaultMaxSubset = 10;

struct EngineOptions {
  /// Worker threads for the environment sweep; 0 picks hardware concurrency.
  unsigned threads = 0;
  /// Largest |A| accepted by reduced_density.
  std::size_t max_subset = kDefaultMaxSubset;
};

/// Product over environment sites l of |a_l(0)|^2 + |a_l(1)|^2 e^{-i Delta_l},
/// Delta_l = sum_{k in A} phi_kl (x_k - y_k). Evaluated directly for a single
/// (x, y) pair; the environment is the complement of A.
cplx environment_factor(const PhaseProfile &profile, const ProductInput &input,
                        const SiteSubset &subset, std::size_t x, std::size_t y);

/// Same, over an explicit environment (any sites outside A, each at most once).
cplx environment_factor(const PhaseProfile &profile, const ProductInput &input,
                        const SiteSubset &subset, std::span<const Site> environment,
                        std::size_t x, std::size_t y);

/// Environment factor for every difference class d in {-1,0,1}^|A|.
///
/// Class codes are base 3 with digit i (weight 3^i) belonging to the i-th
/// listed site; digit 0 means d_i = 0, 1 means +1, 2 means -1.
std::vector<cplx> environment_classes(const PhaseProfile &profile, const ProductInput &input,
                                      const SiteSubset &subset,
                                      std::span<const Site> environment,
                                      const EngineOptions &options = {});

/// Exact reduced density operator of `subset`.
///
/// With include_internal = false this is rho'_A (no controlled phases inside
/// A); with true the intra-block phases are applied, giving rho_A. Both share
/// the same spectrum. Cost is O(3^|A| |B|) for the sweep plus O(4^|A|).
DensityMatrix reduced_density(const PhaseProfile &profile, const ProductInput &input,
                              const SiteSubset &subset, bool include_internal,
                              const EngineOptions &options = {});

/// As above, but only the listed environment sites are traced out; every
/// other site outside A is dropped as if it had never interacted. Used for
/// entropy lower bounds and for sub-block states of a larger block.
DensityMatrix reduced_density(const PhaseProfile &profile, const ProductInput &input,
                              const SiteSubset &subset, std::span<const Site> environment,
                              bool include_internal, const EngineOptions &options = {});

/// c = prod_{l != k} cos(phi_kl / 2) * exp(-i sum_{l != k} phi_kl / 2).
///
/// For |+> inputs the single-site state is [[1/2, conj(c)/2], [c/2, 1/2]]
/// with eigenvalues (1 +- |c|) / 2.
cplx single_site_coherence(const PhaseProfile &profile, Site k);

}  // namespace wgs

#endif  // WGS_RDM_ENGINE_HPP
