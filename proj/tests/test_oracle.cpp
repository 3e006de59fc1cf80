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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "test_support.hpp"
#include "wgs/measures.hpp"

using namespace wgs;
using wgs::testing::expect_errc;
using wgs::testing::expect_valid_density;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(oracle_evolve, zero_time_is_product_state) {
  std::mt19937_64 rng(4);
  const auto input = ProductInput::random(5, rng);
  const PhaseProfile profile(Lattice::chain(5), CouplingLaw::power(1), 0.0);
  const auto psi = oracle::evolve(profile, input);
  for (std::size_t x = 0; x < 32; ++x) {
    cplx a = 1.0;
    for (std::size_t k = 0; k < 5; ++k) a *= input[k][(x >> (4 - k)) & 1U];
    EXPECT_NEAR(std::abs(psi[x] - a), 0.0, 1e-15);
  }
}

TEST(oracle_evolve, single_controlled_phase) {
  const PhaseProfile profile(Lattice::chain(2), CouplingLaw::cutoff(1), pi);
  const auto psi = oracle::evolve(profile, ProductInput::plus(2));
  EXPECT_NEAR(std::abs(psi[0] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[1] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[2] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[3] + 0.5), 0.0, 1e-15);
}

TEST(oracle_evolve, matches_literal_gate_sequence) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto input = ProductInput::random(3 + trial % 5, rng);
    const PhaseProfile profile(Lattice::chain(input.size()),
                               CouplingLaw(PowerLaw{0.5}, Disorder{Disorder::Kind::uniform, -3, 3, rng()}),
                               1.0);
    const auto psi = oracle::evolve(profile, input);
    const auto literal = wgs::testing::apply_gates(profile, input);
    EXPECT_LT((psi.amplitudes() - literal).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(oracle_evolve, preserves_norm) {
  std::mt19937_64 rng(7);
  const auto input = ProductInput::random(14, rng);
  const PhaseProfile profile(Lattice({2, 7}, {Boundary::periodic}), CouplingLaw::power(0.4), 2.5);
  EXPECT_NEAR(oracle::evolve(profile, input).norm(), 1.0, 1e-12);
}

TEST(oracle_evolve, size_limit) {
  const PhaseProfile profile(Lattice::chain(21), CouplingLaw::power(1), 1.0);
  expect_errc(Errc::too_large, [&] { oracle::evolve(profile, ProductInput::plus(21)); });
}

TEST(oracle_partial_trace, whole_system_is_pure) {
  const PhaseProfile profile(Lattice::chain(5), CouplingLaw::power(1.2), 0.8);
  const auto psi = oracle::evolve(profile, ProductInput::plus(5));
  const auto rho = oracle::partial_trace(psi, SiteSubset::range(0, 5, 5));
  EXPECT_LT(trace_distance(rho, DensityMatrix::pure(psi.amplitudes())), 1e-13);
}

TEST(oracle_partial_trace, bell_pair_marginal_is_mixed) {
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell[0] = bell[3] = std::sqrt(0.5);
  const oracle::StateVector state(2, bell);
  const auto rho = oracle::partial_trace(state, SiteSubset({0}, 2));
  EXPECT_LT(trace_distance(rho, DensityMatrix::maximally_mixed(1)), 1e-15);
}

TEST(oracle_partial_trace, random_states_are_valid) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto input = ProductInput::random(10, rng);
    const PhaseProfile profile(Lattice::chain(10), CouplingLaw::power(0.3 + trial * 0.3), 1.0 + trial);
    const auto state = oracle::evolve(profile, input);
    const SiteSubset a({static_cast<Site>(trial % 10), static_cast<Site>((trial + 3) % 10),
                        static_cast<Site>((trial + 7) % 10)},
                       10);
    expect_valid_density(oracle::partial_trace(state, a));
  }
}

TEST(density_matrix, partial_trace_keeps_order) {
  std::mt19937_64 rng(12);
  const auto input = ProductInput::random(6, rng);
  const PhaseProfile profile(Lattice::chain(6), CouplingLaw::power(0.5), 1.7);
  const auto state = oracle::evolve(profile, input);
  const auto rho3 = oracle::partial_trace(state, SiteSubset({4, 1, 2}, 6));
  const std::array<std::size_t, 2> keep{2, 0};
  const auto reduced = rho3.partial_trace(keep);
  const auto direct = oracle::partial_trace(state, SiteSubset({2, 4}, 6));
  EXPECT_LT(trace_distance(reduced, direct), 1e-13);
}
