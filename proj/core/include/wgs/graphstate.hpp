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

#ifndef WGS_GRAPHSTATE_HPP
#define WGS_GRAPHSTATE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "wgs/geometry.hpp"
#include "wgs/state.hpp"

namespace wgs {

/// Dense matrix over GF(2) with rows packed into 64-bit words.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }

  BinaryMatrix transpose() const;
  BinaryMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  std::size_t count_ones() const;

  friend bool operator==(const BinaryMatrix &, const BinaryMatrix &) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline constexpr double kGraphPhaseTolerance = 1e-9;

/// Rank over GF(2) by Gaussian elimination on packed rows.
std::size_t gf2_rank(BinaryMatrix m);

/// N x N adjacency with entry 1 iff phi_kl is pi (within `tolerance`). Throws
/// Errc::not_a_graph_state if any phase is neither 0 nor pi.
BinaryMatrix adjacency_from_profile(const PhaseProfile &profile,
                                    double tolerance = kGraphPhaseTolerance);

/// Gamma_AB (|A| rows, columns = complement of A ascending) built straight from
/// the profile, without the N x N adjacency.
BinaryMatrix cut_matrix(const PhaseProfile &profile, const SiteSubset &subset,
                        double tolerance = kGraphPhaseTolerance);

/// Gamma_AB taken from a full adjacency matrix.
BinaryMatrix cut_matrix(const BinaryMatrix &adjacency, std::span<const Site> subset);

/// Entropy of entanglement of A for a graph state: rank of Gamma_AB.
std::size_t graph_block_entropy(const BinaryMatrix &adjacency, std::span<const Site> subset);
std::size_t graph_block_entropy(const BinaryMatrix &adjacency, const SiteSubset &subset);
std::size_t graph_block_entropy(const PhaseProfile &profile, const SiteSubset &subset,
                                double tolerance = kGraphPhaseTolerance);

/// Vertices of A with at least one edge into B.
std::size_t boundary_vertex_count(const BinaryMatrix &adjacency, std::span<const Site> subset);

/// a^d - (a - min(2 lambda, a))^d for a centered a^d block with at least lambda
/// sites of margin on every side.
std::uint64_t analytic_block_entropy(std::size_t d, std::uint64_t a, std::uint64_t lambda);

/// Sites of the a^d cube centered in a lattice (offset (E - a) / 2 per axis).
std::vector<Site> centered_cube(const Lattice &lattice, std::size_t side);

/// Edge list: one "k l" line per undirected edge, 0-based, k < l on output.
/// '#' starts a comment. Duplicate edges and self-loops are rejected.
BinaryMatrix read_edge_list(std::istream &in, std::size_t vertices);
void write_edge_list(std::ostream &out, const BinaryMatrix &adjacency);

}  // namespace wgs

#endif  // WGS_GRAPHSTATE_HPP
