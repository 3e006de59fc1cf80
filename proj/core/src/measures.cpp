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

#include "wgs/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wgs/error.hpp"
#include "wgs/parallel.hpp"

namespace wgs {

namespace {

constexpr double kClipNegative = 1e-10;
constexpr double kRejectNegative = 1e-8;

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

const std::array<Matrix2, 3> &paulis() {
  static const std::array<Matrix2, 3> p = [] {
    const cplx i(0.0, 1.0);
    Matrix2 x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    return std::array<Matrix2, 3>{x, y, z};
  }();
  return p;
}

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

void require_two_qubits(const DensityMatrix &rho) {
  if (rho.qubits() != 2) {
    throw Error(Errc::dimension_mismatch,
                "expected a two-qubit state, got " + std::to_string(rho.qubits()) + " qubits");
  }
}

void require_block(const PhaseProfile &profile, Block block) {
  if (block.length == 0 || block.first + block.length > profile.size()) {
    throw Error(Errc::invalid_site, "block [" + std::to_string(block.first) + ", " +
                                        std::to_string(block.first + block.length) +
                                        ") does not fit a lattice of " +
                                        std::to_string(profile.size()));
  }
}

double purity(const DensityMatrix &rho) { return rho.matrix().cwiseAbs2().sum(); }

}  // namespace

double entropy_of_spectrum(const Eigen::VectorXd &eigenvalues) {
  double s = 0.0;
  for (const double p : eigenvalues) {
    if (p < -kRejectNegative) {
      throw Error(Errc::not_positive_semidefinite,
                  "eigenvalue " + std::to_string(p) + " below -1e-8");
    }
    if (p <= 0.0) continue;
    s -= p * std::log2(p);
  }
  // A pure state can land a few ulps below zero through p log p at p ~ 1.
  return std::max(s, 0.0);
}

double entropy(const DensityMatrix &rho) { return entropy_of_spectrum(rho.eigenvalues()); }

double subset_entropy(const PhaseProfile &profile, const ProductInput &input,
                      const SiteSubset &subset, const EngineOptions &options) {
  return entropy(reduced_density(profile, input, subset, false, options));
}

double block_entropy(const PhaseProfile &profile, const ProductInput &input, Block block,
                     const EngineOptions &options) {
  require_block(profile, block);
  if (block.length > options.max_subset) {
    throw Error(Errc::subset_too_large,
                "block of " + std::to_string(block.length) +
                    " sites exceeds the engine limit; use block_entropy_upper");
  }
  return subset_entropy(profile, input, block.subset(profile.size()), options);
}

std::vector<std::size_t> subblock_partition(std::size_t length, std::size_t subblock) {
  if (subblock == 0) throw Error(Errc::invalid_argument, "sub-block size must be positive");
  if (length <= subblock) return {length};
  std::vector<std::size_t> sizes(length / subblock, subblock);
  sizes.back() += length % subblock;
  return sizes;
}

double block_entropy_upper(const PhaseProfile &profile, const ProductInput &input, Block block,
                           std::size_t subblock, const EngineOptions &options) {
  require_block(profile, block);
  const auto sizes = subblock_partition(block.length, subblock);
  if (sizes.size() == 1) return block_entropy(profile, input, block, options);
  // Adjacent pairs are the largest terms; the last one carries the remainder.
  if (sizes[sizes.size() - 2] + sizes.back() > options.max_subset) {
    throw Error(Errc::invalid_argument,
                "sub-block pair of " + std::to_string(sizes[sizes.size() - 2] + sizes.back()) +
                    " sites exceeds the engine limit of " + std::to_string(options.max_subset));
  }

  // Every term is a marginal of the stripped block state: only sites outside
  // the whole block act as environment.
  const auto whole = block.subset(profile.size());
  const auto environment = whole.complement();

  std::vector<Site> starts(sizes.size());
  starts[0] = block.first;
  for (std::size_t i = 1; i < sizes.size(); ++i) starts[i] = starts[i - 1] + sizes[i - 1];

  const auto term = [&](Site first, std::size_t length) {
    const auto sub = SiteSubset::range(first, length, profile.size());
    return entropy(reduced_density(profile, input, sub, environment, false, options));
  };

  double bound = 0.0;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) bound += term(starts[i], sizes[i] + sizes[i + 1]);
  for (std::size_t i = 1; i + 1 < sizes.size(); ++i) bound -= term(starts[i], sizes[i]);
  return std::clamp(bound, 0.0, static_cast<double>(block.length));
}

std::vector<Site> environment_within(const Lattice &lattice, const SiteSubset &subset,
                                     double radius) {
  std::vector<Site> out;
  const double r2 = radius * radius * (1.0 + 1e-12);
  for (Site l = 0; l < lattice.size(); ++l) {
    if (subset.contains(l)) continue;
    for (const Site k : subset.sites()) {
      if (lattice.squared_distance(k, l) <= r2) {
        out.push_back(l);
        break;
      }
    }
  }
  return out;
}

double block_entropy_lower(const PhaseProfile &profile, const ProductInput &input, Block block,
                           double radius, const EngineOptions &options) {
  require_block(profile, block);
  if (block.length > options.max_subset) {
    throw Error(Errc::subset_too_large, "block exceeds the engine limit");
  }
  const auto subset = block.subset(profile.size());
  const auto environment = environment_within(profile.lattice(), subset, radius);
  return entropy(reduced_density(profile, input, subset, environment, false, options));
}

EntropyBound block_entropy_bounds(const PhaseProfile &profile, const ProductInput &input,
                                  Block block, std::size_t subblock, double radius,
                                  const EngineOptions &options) {
  EntropyBound b;
  b.length = block.length;
  b.subblock = subblock;
  b.radius = radius;
  b.upper = block_entropy_upper(profile, input, block, subblock, options);
  if (block.length <= options.max_subset) {
    b.lower = block_entropy_lower(profile, input, block, radius, options);
  }
  return b;
}

CorrelationMatrix correlation_matrix(const DensityMatrix &rho2) {
  require_two_qubits(rho2);
  const Matrix4 rho = rho2.matrix();
  const std::array<std::size_t, 1> first{0}, second{1};
  const Matrix2 rho_k = rho2.partial_trace(first).matrix();
  const Matrix2 rho_l = rho2.partial_trace(second).matrix();
  const auto &p = paulis();
  CorrelationMatrix out;
  for (int a = 0; a < 3; ++a) {
    const double ek = (rho_k * p[a]).trace().real();
    for (int b = 0; b < 3; ++b) {
      const double el = (rho_l * p[b]).trace().real();
      const double joint = (rho * kron(p[a], p[b])).trace().real();
      out.q(a, b) = joint - ek * el;
    }
  }
  return out;
}

CorrelationMatrix correlation_matrix(const PhaseProfile &profile, const ProductInput &input,
                                     Site k, Site l, const EngineOptions &options) {
  if (k == l) throw Error(Errc::invalid_pair, "correlations need two distinct sites");
  const SiteSubset pair({k, l}, profile.size());
  return correlation_matrix(reduced_density(profile, input, pair, true, options));
}

double max_correlation(const CorrelationMatrix &q) {
  const Eigen::Matrix3d gram = q.q.transpose() * q.q;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Eigen::Vector4d spin_flip_spectrum(const DensityMatrix &rho2) {
  require_two_qubits(rho2);
  const Matrix4 rho = rho2.matrix();
  const Matrix4 yy = kron(paulis()[1], paulis()[1]);
  const Matrix4 flipped = yy * rho.conjugate() * yy;

  // Eigenvalues of rho * flipped equal those of sqrt(rho) flipped sqrt(rho),
  // which is Hermitian and positive semidefinite.
  Eigen::SelfAdjointEigenSolver<Matrix4> root_solver(rho);
  const Eigen::Vector4d w = root_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4 root = root_solver.eigenvectors() * w.asDiagonal() * root_solver.eigenvectors().adjoint();
  const Matrix4 m = root * flipped * root;
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  Eigen::Vector4d lambda = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  return lambda;
}

double concurrence(const DensityMatrix &rho2) {
  const auto l = spin_flip_spectrum(rho2);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_of_assistance(const DensityMatrix &rho2) { return spin_flip_spectrum(rho2).sum(); }

LocalizableBounds assistance_and_localizable_bounds(const PhaseProfile &profile,
                                                    const ProductInput &input, Site k, Site l,
                                                    const EngineOptions &options) {
  if (k == l) throw Error(Errc::invalid_pair, "bounds need two distinct sites");
  const SiteSubset pair({k, l}, profile.size());
  const auto rho = reduced_density(profile, input, pair, true, options);
  return {max_correlation(correlation_matrix(rho)), concurrence_of_assistance(rho)};
}

double meyer_wallach(std::span<const DensityMatrix> single_site_states) {
  if (single_site_states.empty()) throw Error(Errc::invalid_argument, "no single-site states");
  double total = 0.0;
  for (const auto &rho : single_site_states) {
    if (rho.qubits() != 1) throw Error(Errc::dimension_mismatch, "expected single-qubit states");
    total += purity(rho);
  }
  return std::max(0.0, 2.0 * (1.0 - total / static_cast<double>(single_site_states.size())));
}

namespace {

MeyerWallach meyer_wallach_over(const PhaseProfile &profile, const ProductInput &input,
                                const std::vector<Site> &sites, const EngineOptions &options) {
  std::vector<double> purities(sites.size());
  EngineOptions inner = options;
  inner.threads = 1;
  parallel_for(sites.size(), options.threads, [&](std::size_t i) {
    const SiteSubset single({sites[i]}, profile.size());
    purities[i] = purity(reduced_density(profile, input, single, false, inner));
  });
  const double mean = std::accumulate(purities.begin(), purities.end(), 0.0) /
                      static_cast<double>(sites.size());
  MeyerWallach out;
  out.value = std::max(0.0, 2.0 * (1.0 - mean));
  out.sites_used = sites.size();
  return out;
}

}  // namespace

MeyerWallach meyer_wallach(const PhaseProfile &profile, const ProductInput &input,
                           const EngineOptions &options) {
  std::vector<Site> sites(profile.size());
  std::iota(sites.begin(), sites.end(), Site{0});
  return meyer_wallach_over(profile, input, sites, options);
}

MeyerWallach meyer_wallach_sampled(const PhaseProfile &profile, const ProductInput &input,
                                   std::size_t samples, std::uint64_t seed,
                                   const EngineOptions &options) {
  if (samples == 0) throw Error(Errc::invalid_argument, "sample count must be positive");
  if (samples >= profile.size()) return meyer_wallach(profile, input, options);
  std::vector<Site> all(profile.size());
  std::iota(all.begin(), all.end(), Site{0});
  std::vector<Site> chosen;
  chosen.reserve(samples);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), samples, rng);
  auto out = meyer_wallach_over(profile, input, chosen, options);
  out.sampled = true;
  return out;
}

}  // namespace wgs
