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

#ifndef WGS_ORACLE_HPP
#define WGS_ORACLE_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "wgs/geometry.hpp"
#include "wgs/state.hpp"

namespace wgs::oracle {

inline constexpr std::size_t kMaxSites = 20;

/// Full 2^N statevector; site 0 is the most significant bit of the index.
class StateVector {
 public:
  StateVector(std::size_t sites, Eigen::VectorXcd amplitudes);

  std::size_t sites() const noexcept { return sites_; }
  const Eigen::VectorXcd &amplitudes() const noexcept { return amps_; }
  cplx operator[](std::size_t index) const { return amps_[static_cast<Eigen::Index>(index)]; }
  double norm() const { return amps_.norm(); }

 private:
  std::size_t sites_;
  Eigen::VectorXcd amps_;
};

/// psi(x) = prod_k a_k(x_k) * exp(-i sum_{k<l} phi_kl x_k x_l).
StateVector evolve(const PhaseProfile &profile, const ProductInput &input);

/// Brute-force tr_B |psi><psi| with the subset's qubit order.
DensityMatrix partial_trace(const StateVector &state, const SiteSubset &subset);

}  // namespace wgs::oracle

#endif  // WGS_ORACLE_HPP
