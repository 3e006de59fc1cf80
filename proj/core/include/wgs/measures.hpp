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

#ifndef WGS_MEASURES_HPP
#define WGS_MEASURES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wgs/geometry.hpp"
#include "wgs/rdm_engine.hpp"
#include "wgs/state.hpp"

namespace wgs {

/// Contiguous run of linear site indices [first, first + length).
struct Block {
  Site first = 0;
  std::size_t length = 0;

  SiteSubset subset(std::size_t lattice_size) const {
    return SiteSubset::range(first, length, lattice_size);
  }
};

/// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) count as zero;
/// anything below -1e-8 throws Errc::not_positive_semidefinite.
double entropy(const DensityMatrix &rho);
double entropy_of_spectrum(const Eigen::VectorXd &eigenvalues);

/// Entropy of an arbitrary subset against the rest of the system.
double subset_entropy(const PhaseProfile &profile, const ProductInput &input,
                      const SiteSubset &subset, const EngineOptions &options = {});

/// S_L of a contiguous block. Throws Errc::subset_too_large above the engine
/// limit; use block_entropy_upper for longer blocks.
double block_entropy(const PhaseProfile &profile, const ProductInput &input, Block block,
                     const EngineOptions &options = {});

/// Sub-block lengths for the strong-subadditivity bound: floor(L / m) pieces of
/// length m, the last one absorbing L mod m.
std::vector<std::size_t> subblock_partition(std::size_t length, std::size_t subblock);

/// Strong-subadditivity upper bound on S_L,
///   sum_i S(L_i L_{i+1}) - sum_{interior i} S(L_i),
/// with every term evaluated on the interaction-stripped block state. Clipped
/// to [0, L]. A block no longer than m is evaluated exactly.
double block_entropy_upper(const PhaseProfile &profile, const ProductInput &input, Block block,
                           std::size_t subblock, const EngineOptions &options = {});

/// Entropy of the block with only the sites within `radius` of the block kept
/// as environment. Never exceeds the exact S_L.
double block_entropy_lower(const PhaseProfile &profile, const ProductInput &input, Block block,
                           double radius, const EngineOptions &options = {});

/// Sites outside `subset` whose distance to the nearest subset site is at most
/// `radius`, ascending.
std::vector<Site> environment_within(const Lattice &lattice, const SiteSubset &subset,
                                     double radius);

struct EntropyBound {
  std::size_t length = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t subblock = 0;
  double radius = 0.0;
};

/// Lower bound is only available while the block fits the engine; otherwise
/// `lower` is 0 (trivially valid).
EntropyBound block_entropy_bounds(const PhaseProfile &profile, const ProductInput &input,
                                  Block block, std::size_t subblock, double radius,
                                  const EngineOptions &options = {});

/// Connected two-point correlations Q_ab = <s_a s_b> - <s_a><s_b>, with rows
/// indexed by the Pauli axis (x, y, z) of the first site.
struct CorrelationMatrix {
  Eigen::Matrix3d q = Eigen::Matrix3d::Zero();

  double max_abs() const { return q.cwiseAbs().maxCoeff(); }
};

CorrelationMatrix correlation_matrix(const DensityMatrix &rho2);
CorrelationMatrix correlation_matrix(const PhaseProfile &profile, const ProductInput &input,
                                     Site k, Site l, const EngineOptions &options = {});

/// Largest singular value of Q.
double max_correlation(const CorrelationMatrix &q);

/// Square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y), descending.
Eigen::Vector4d spin_flip_spectrum(const DensityMatrix &rho2);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4).
double concurrence(const DensityMatrix &rho2);

/// Concurrence of assistance l1 + l2 + l3 + l4.
double concurrence_of_assistance(const DensityMatrix &rho2);

/// Bounds on the localizable entanglement between k and l:
/// lower = Q_max, upper = concurrence of assistance.
struct LocalizableBounds {
  double lower = 0.0;
  double upper = 0.0;
};

LocalizableBounds assistance_and_localizable_bounds(const PhaseProfile &profile,
                                                    const ProductInput &input, Site k, Site l,
                                                    const EngineOptions &options = {});

struct MeyerWallach {
  double value = 0.0;
  std::size_t sites_used = 0;
  /// True when the average runs over a random subset of sites (an estimator).
  bool sampled = false;
};

/// 2 [1 - mean_k tr(rho_k^2)] over the given single-site states.
double meyer_wallach(std::span<const DensityMatrix> single_site_states);

MeyerWallach meyer_wallach(const PhaseProfile &profile, const ProductInput &input,
                           const EngineOptions &options = {});

/// Average over `samples` distinct sites drawn with the given seed; falls back
/// to all sites when samples >= N.
MeyerWallach meyer_wallach_sampled(const PhaseProfile &profile, const ProductInput &input,
                                   std::size_t samples, std::uint64_t seed,
                                   const EngineOptions &options = {});

}  // namespace wgs

#endif  // WGS_MEASURES_HPP
