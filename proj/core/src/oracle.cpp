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

#include "wgs/oracle.hpp"

#include <string>
#include <vector>

#include "wgs/error.hpp"
#include "wgs/parallel.hpp"

namespace wgs::oracle {

StateVector::StateVector(std::size_t sites, Eigen::VectorXcd amplitudes)
    : sites_(sites), amps_(std::move(amplitudes)) {
  if (sites_ > kMaxSites) throw Error(Errc::too_large, "statevector limited to 20 sites");
  if (amps_.size() != (Eigen::Index{1} << sites_)) {
    throw Error(Errc::dimension_mismatch, "amplitude count must be 2^sites");
  }
}

StateVector evolve(const PhaseProfile &profile, const ProductInput &input) {
  const std::size_t n = profile.size();
  if (n > kMaxSites) {
    throw Error(Errc::too_large, "oracle evolution limited to 20 sites, got " + std::to_string(n));
  }
  if (input.size() != n) throw Error(Errc::dimension_mismatch, "input size differs from lattice");

  std::vector<double> phi(n * n, 0.0);
  for (Site k = 0; k < n; ++k) {
    for (Site l = k + 1; l < n; ++l) phi[k * n + l] = profile.phase(k, l);
  }

  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
  parallel_for((dim + 4095) / 4096, 0, [&](std::size_t chunk) {
    const std::size_t end = std::min(dim, (chunk + 1) * 4096);
    std::vector<Site> ones;
    ones.reserve(n);
    for (std::size_t x = chunk * 4096; x < end; ++x) {
      ones.clear();
      cplx amp(1.0);
      for (Site k = 0; k < n; ++k) {
        const unsigned bit = (x >> (n - 1 - k)) & 1U;
        amp *= input[k][bit];
        if (bit) ones.push_back(k);
      }
      double theta = 0.0;
      for (std::size_t i = 0; i < ones.size(); ++i) {
        for (std::size_t j = i + 1; j < ones.size(); ++j) theta += phi[ones[i] * n + ones[j]];
      }
      amps[static_cast<Eigen::Index>(x)] = amp * std::polar(1.0, -theta);
    }
  });
  return StateVector(n, std::move(amps));
}

DensityMatrix partial_trace(const StateVector &state, const SiteSubset &subset) {
  const std::size_t n = state.sites();
  if (subset.lattice_size() != n) throw Error(Errc::dimension_mismatch, "subset size differs from state");
  const auto rest = subset.complement();
  const std::size_t a = subset.size();
  const std::size_t dim_a = std::size_t{1} << a;
  const std::size_t dim_b = std::size_t{1} << rest.size();

  // Basis index of the full state for (x on A, b on B).
  std::vector<std::size_t> from_a(dim_a, 0), from_b(dim_b, 0);
  for (std::size_t x = 0; x < dim_a; ++x) {
    for (std::size_t i = 0; i < a; ++i) {
      if ((x >> subset.bit(i)) & 1U) from_a[x] |= std::size_t{1} << (n - 1 - subset[i]);
    }
  }
  for (std::size_t b = 0; b < dim_b; ++b) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if ((b >> j) & 1U) from_b[b] |= std::size_t{1} << (n - 1 - rest[j]);
    }
  }

  // M(x, b) = psi(x, b); rho = M M^dagger.
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
  for (std::size_t b = 0; b < dim_b; ++b) {
    for (std::size_t x = 0; x < dim_a; ++x) {
      m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(b)) = state[from_a[x] | from_b[b]];
    }
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

}  // namespace wgs::oracle
