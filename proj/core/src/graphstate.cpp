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

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "wgs/error.hpp"

namespace wgs {

namespace {

constexpr std::size_t kWordBits = 64;

void check_square(const BinaryMatrix &m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, "adjacency must be square");
}

// 1 for pi, 0 for 0 (or 2 pi); anything else is not a graph-state phase.
bool snap_phase(double phi, double tolerance, Site k, Site l) {
  constexpr double pi = std::numbers::pi;
  if (std::abs(phi - pi) <= tolerance) return true;
  if (phi <= tolerance || std::abs(phi - 2 * pi) <= tolerance) return false;
  std::ostringstream os;
  os.precision(17);
  os << "phase(" << k << "," << l << ") = " << phi << " is neither 0 nor pi";
  throw Error(Errc::not_a_graph_state, os.str());
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits), bits_(rows * words_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "binary matrix index out of range");
  return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "binary matrix index out of range");
  auto &word = bits_[r * words_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  word = value ? (word | mask) : (word & ~mask);
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto src = row(r);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t word = src[w]; word != 0; word &= word - 1) {
        t.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)), r);
      }
    }
  }
  return t;
}

BinaryMatrix BinaryMatrix::submatrix(std::span<const std::size_t> rows,
                                     std::span<const std::size_t> cols) const {
  BinaryMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (get(rows[i], cols[j])) out.set(i, j);
    }
  }
  return out;
}

std::size_t BinaryMatrix::count_ones() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t gf2_rank(BinaryMatrix m) {
  std::size_t rank = 0;
  const std::size_t words = m.words_per_row();
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t w = col / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(m.row(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      auto a = m.row(pivot);
      auto b = m.row(rank);
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(w), a.end(),
                       b.begin() + static_cast<std::ptrdiff_t>(w));
    }
    const auto pivot_row = m.row(rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      auto target = m.row(r);
      if (!(target[w] & mask)) continue;
      for (std::size_t k = w; k < words; ++k) target[k] ^= pivot_row[k];
    }
    ++rank;
  }
  return rank;
}

BinaryMatrix adjacency_from_profile(const PhaseProfile &profile, double tolerance) {
  const std::size_t n = profile.size();
  BinaryMatrix adj(n, n);
  for (Site k = 0; k < n; ++k) {
    for (Site l = k + 1; l < n; ++l) {
      if (snap_phase(profile.phase_unchecked(k, l), tolerance, k, l)) {
        adj.set(k, l);
        adj.set(l, k);
      }
    }
  }
  return adj;
}

BinaryMatrix cut_matrix(const PhaseProfile &profile, const SiteSubset &subset, double tolerance) {
  if (subset.lattice_size() != profile.size()) {
    throw Error(Errc::dimension_mismatch, "subset and profile disagree on the number of sites");
  }
  const auto rest = subset.complement();
  BinaryMatrix gamma(subset.size(), rest.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (snap_phase(profile.phase_unchecked(subset[i], rest[j]), tolerance, subset[i], rest[j])) {
        gamma.set(i, j);
      }
    }
  }
  return gamma;
}

BinaryMatrix cut_matrix(const BinaryMatrix &adjacency, std::span<const Site> subset) {
  check_square(adjacency);
  const SiteSubset a(std::vector<Site>(subset.begin(), subset.end()), adjacency.rows());
  const auto rest = a.complement();
  return adjacency.submatrix(a.sites(), rest);
}

std::size_t graph_block_entropy(const BinaryMatrix &adjacency, std::span<const Site> subset) {
  return gf2_rank(cut_matrix(adjacency, subset));
}

std::size_t graph_block_entropy(const BinaryMatrix &adjacency, const SiteSubset &subset) {
  return graph_block_entropy(adjacency, std::span<const Site>(subset.sites()));
}

std::size_t graph_block_entropy(const PhaseProfile &profile, const SiteSubset &subset,
                                double tolerance) {
  return gf2_rank(cut_matrix(profile, subset, tolerance));
}

std::size_t boundary_vertex_count(const BinaryMatrix &adjacency, std::span<const Site> subset) {
  const auto gamma = cut_matrix(adjacency, subset);
  std::size_t count = 0;
  for (std::size_t r = 0; r < gamma.rows(); ++r) {
    const auto row = gamma.row(r);
    if (std::any_of(row.begin(), row.end(), [](std::uint64_t w) { return w != 0; })) ++count;
  }
  return count;
}

std::uint64_t analytic_block_entropy(std::size_t d, std::uint64_t a, std::uint64_t lambda) {
  const auto ipow = [](std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
  };
  const std::uint64_t inner = a - std::min(2 * lambda, a);
  return ipow(a, d) - ipow(inner, d);
}

std::vector<Site> centered_cube(const Lattice &lattice, std::size_t side) {
  const auto &extents = lattice.extents();
  std::vector<std::size_t> offset(extents.size());
  for (std::size_t axis = 0; axis < extents.size(); ++axis) {
    if (side == 0 || side > extents[axis]) {
      throw Error(Errc::invalid_argument, "cube side does not fit the lattice");
    }
    offset[axis] = (extents[axis] - side) / 2;
  }
  std::vector<Site> sites;
  std::vector<std::size_t> local(extents.size(), 0), coords(extents.size());
  while (true) {
    for (std::size_t axis = 0; axis < extents.size(); ++axis) coords[axis] = offset[axis] + local[axis];
    sites.push_back(lattice.site_at(coords));
    std::size_t axis = extents.size();
    while (axis > 0) {
      --axis;
      if (++local[axis] < side) break;
      local[axis] = 0;
      if (axis == 0) return sites;
    }
  }
}

BinaryMatrix read_edge_list(std::istream &in, std::size_t vertices) {
  BinaryMatrix adj(vertices, vertices);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long k = 0, l = 0;
    if (!(fields >> k)) continue;
    std::string extra;
    if (!(fields >> l) || (fields >> extra)) {
      throw Error(Errc::invalid_argument, "edge list line " + std::to_string(line_no) +
                                              ": expected two vertex indices");
    }
    if (k < 0 || l < 0 || static_cast<std::size_t>(k) >= vertices ||
        static_cast<std::size_t>(l) >= vertices) {
      throw Error(Errc::invalid_site, "edge list line " + std::to_string(line_no) +
                                          ": vertex out of range");
    }
    if (k == l) {
      throw Error(Errc::invalid_argument, "edge list line " + std::to_string(line_no) + ": self-loop");
    }
    const auto a = static_cast<std::size_t>(k), b = static_cast<std::size_t>(l);
    if (adj.get(a, b)) {
      throw Error(Errc::invalid_argument, "edge list line " + std::to_string(line_no) + ": duplicate edge");
    }
    adj.set(a, b);
    adj.set(b, a);
  }
  return adj;
}

void write_edge_list(std::ostream &out, const BinaryMatrix &adjacency) {
  check_square(adjacency);
  for (std::size_t k = 0; k < adjacency.rows(); ++k) {
    for (std::size_t l = k + 1; l < adjacency.cols(); ++l) {
      if (adjacency.get(k, l)) out << k << ' ' << l << '\n';
    }
  }
}

}  // namespace wgs
