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

#include "wgs/graphstate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

#include "test_support.hpp"
#include "wgs/measures.hpp"

using namespace wgs;
using wgs::testing::expect_errc;

namespace {

constexpr double pi = std::numbers::pi;

// Plain bool-matrix elimination, independent of the packed implementation.
std::size_t naive_rank(std::vector<std::vector<bool>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

BinaryMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (bit(rng)) m.set(r, c);
    }
  }
  return m;
}

std::vector<std::vector<bool>> unpack(const BinaryMatrix &m) {
  std::vector<std::vector<bool>> out(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  }
  return out;
}

PhaseProfile cutoff_profile(Lattice lattice, double lambda) {
  return PhaseProfile(std::move(lattice), CouplingLaw::cutoff(lambda), pi);
}

BinaryMatrix counterexample_graph() {
  // Sites 1..4 of the four-qubit example, 0-based: edges 13, 14, 23, 24.
  std::istringstream edges("0 2\n0 3\n1 2\n1 3\n");
  return read_edge_list(edges, 4);
}

}  // namespace

TEST(binary_matrix, set_get_and_transpose) {
  BinaryMatrix m(3, 130);
  m.set(0, 0);
  m.set(1, 64);
  m.set(2, 129);
  EXPECT_TRUE(m.get(1, 64));
  EXPECT_FALSE(m.get(1, 63));
  EXPECT_EQ(m.words_per_row(), 3u);
  EXPECT_EQ(m.count_ones(), 3u);
  const auto t = m.transpose();
  EXPECT_EQ(t.rows(), 130u);
  EXPECT_TRUE(t.get(129, 2));
  EXPECT_EQ(t.transpose(), m);
  m.set(1, 64, false);
  EXPECT_EQ(m.count_ones(), 2u);
  expect_errc(Errc::invalid_argument, [&] { (void)m.get(3, 0); });
}

TEST(gf2_rank, small_cases) {
  EXPECT_EQ(gf2_rank(BinaryMatrix::identity(7)), 7u);
  EXPECT_EQ(gf2_rank(BinaryMatrix::identity(200)), 200u);
  BinaryMatrix ones(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) ones.set(r, c);
  }
  EXPECT_EQ(gf2_rank(ones), 1u);
  EXPECT_EQ(gf2_rank(BinaryMatrix(5, 9)), 0u);
  EXPECT_EQ(gf2_rank(BinaryMatrix(0, 0)), 0u);
}

TEST(gf2_rank, matches_naive_elimination_and_transpose) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = std::uniform_int_distribution<std::size_t>(1, 90)(rng);
    const auto cols = std::uniform_int_distribution<std::size_t>(1, 150)(rng);
    const double density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    const auto m = random_matrix(rng, rows, cols, density);
    const auto r = gf2_rank(m);
    EXPECT_EQ(r, naive_rank(unpack(m)));
    EXPECT_EQ(r, gf2_rank(m.transpose()));
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(adjacency, nearest_neighbour_path) {
  const auto adj = adjacency_from_profile(cutoff_profile(Lattice::chain(5), 1));
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t l = 0; l < 5; ++l) {
      EXPECT_EQ(adj.get(k, l), k + 1 == l || l + 1 == k) << k << "," << l;
    }
  }
}

TEST(adjacency, band_of_width_lambda) {
  const auto adj = adjacency_from_profile(cutoff_profile(Lattice::chain(12), 2));
  for (std::size_t k = 0; k < 12; ++k) {
    for (std::size_t l = 0; l < 12; ++l) {
      const auto gap = k > l ? k - l : l - k;
      EXPECT_EQ(adj.get(k, l), gap >= 1 && gap <= 2);
    }
  }
}

TEST(adjacency, weighted_phases_rejected) {
  const PhaseProfile weighted(Lattice::chain(6), CouplingLaw::power(3), 0.3 * pi);
  expect_errc(Errc::not_a_graph_state, [&] { (void)adjacency_from_profile(weighted); });
  expect_errc(Errc::not_a_graph_state,
              [&] { (void)cut_matrix(weighted, SiteSubset({2, 3}, 6)); });
}

TEST(adjacency, two_pi_counts_as_no_edge) {
  const PhaseProfile doubled(Lattice::chain(6), CouplingLaw::cutoff(1), 2 * pi);
  EXPECT_EQ(adjacency_from_profile(doubled).count_ones(), 0u);
}

TEST(graph_block_entropy, counterexample_rank_below_boundary_count) {
  const auto adj = counterexample_graph();
  const std::vector<Site> a{0, 1};
  EXPECT_EQ(graph_block_entropy(adj, a), 1u);
  EXPECT_EQ(boundary_vertex_count(adj, a), 2u);
}

TEST(graph_block_entropy, isolated_block) {
  std::istringstream edges("0 1\n1 2\n4 5\n");
  const auto adj = read_edge_list(edges, 6);
  const std::vector<Site> a{0, 1, 2};
  EXPECT_EQ(graph_block_entropy(adj, a), 0u);
}

TEST(graph_block_entropy, chain_interior_block) {
  const auto profile = cutoff_profile(Lattice::chain(80), 3);
  EXPECT_EQ(graph_block_entropy(profile, SiteSubset::range(35, 10, 80)), 6u);
  const auto adj = adjacency_from_profile(profile);
  EXPECT_EQ(graph_block_entropy(adj, SiteSubset::range(35, 10, 80)), 6u);
}

TEST(graph_block_entropy, square_lattice_block) {
  const Lattice grid({12, 12}, {Boundary::open});
  const auto block = centered_cube(grid, 4);
  EXPECT_EQ(block.size(), 16u);
  EXPECT_EQ(graph_block_entropy(cutoff_profile(grid, 1), SiteSubset(block, grid.size())), 12u);
}

TEST(analytic_block_entropy, formula_values) {
  EXPECT_EQ(analytic_block_entropy(1, 10, 2), 4u);
  EXPECT_EQ(analytic_block_entropy(2, 4, 1), 12u);
  EXPECT_EQ(analytic_block_entropy(3, 5, 0), 0u);
  EXPECT_EQ(analytic_block_entropy(1, 3, 5), 3u);
  EXPECT_EQ(analytic_block_entropy(2, 3, 2), 9u);
}

TEST(analytic_block_entropy, matches_rank_with_margin) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      for (std::size_t a = 2; a <= 6; ++a) {
        const std::size_t extent = a + 2 * lambda + 2;
        const Lattice lattice(std::vector<std::size_t>(d, extent), {Boundary::open});
        const auto block = centered_cube(lattice, a);
        const auto rank = graph_block_entropy(cutoff_profile(lattice, static_cast<double>(lambda)),
                                              SiteSubset(block, lattice.size()));
        EXPECT_EQ(rank, analytic_block_entropy(d, a, lambda)) << "d=" << d << " lambda=" << lambda << " a=" << a;
      }
    }
  }
}

TEST(graph_block_entropy, surface_shell_scaling_in_2d) {
  for (std::size_t a = 2; a <= 24; a += 2) {
    const Lattice grid({a + 4, a + 4}, {Boundary::open});
    const auto block = centered_cube(grid, a);
    const double rank = static_cast<double>(
        graph_block_entropy(cutoff_profile(grid, 1), SiteSubset(block, grid.size())));
    const double ratio = rank / std::sqrt(static_cast<double>(block.size()));
    EXPECT_GE(ratio, 1.0) << a;
    EXPECT_LE(ratio, 4.0) << a;
  }
}

TEST(graph_block_entropy, equals_dense_engine_entropy) {
  std::mt19937_64 rng(8);
  const std::vector<Lattice> lattices = {Lattice::chain(30), Lattice::chain(25, Boundary::periodic),
                                         Lattice({6, 6}, {Boundary::open}),
                                         Lattice({5, 6}, {Boundary::periodic})};
  for (const auto &lattice : lattices) {
    for (double lambda : {1.0, std::sqrt(2.0), 2.0, 3.0}) {
      const auto profile = cutoff_profile(lattice, lambda);
      const auto input = ProductInput::plus(lattice.size());
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Site> sites(lattice.size());
        std::iota(sites.begin(), sites.end(), Site{0});
        std::shuffle(sites.begin(), sites.end(), rng);
        sites.resize(std::uniform_int_distribution<std::size_t>(1, 8)(rng));
        const SiteSubset a(sites, lattice.size());
        const double dense = subset_entropy(profile, input, a);
        EXPECT_NEAR(dense, static_cast<double>(graph_block_entropy(profile, a)), 1e-9);
      }
    }
  }
}

TEST(edge_list, round_trip) {
  const auto adj = adjacency_from_profile(cutoff_profile(Lattice({4, 5}, {Boundary::periodic}), 1.5));
  std::ostringstream out;
  write_edge_list(out, adj);
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in, 20), adj);
}

TEST(edge_list, comments_and_errors) {
  std::istringstream ok("# header\n0 1  # trailing\n\n2 3\n");
  EXPECT_EQ(read_edge_list(ok, 4).count_ones(), 4u);
  std::istringstream dup("0 1\n1 0\n");
  expect_errc(Errc::invalid_argument, [&] { (void)read_edge_list(dup, 3); });
  std::istringstream loop("2 2\n");
  expect_errc(Errc::invalid_argument, [&] { (void)read_edge_list(loop, 3); });
  std::istringstream range("0 5\n");
  expect_errc(Errc::invalid_site, [&] { (void)read_edge_list(range, 3); });
  std::istringstream junk("0 1 2\n");
  expect_errc(Errc::invalid_argument, [&] { (void)read_edge_list(junk, 3); });
}
