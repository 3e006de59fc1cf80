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

#ifndef WGS_STATE_HPP
#define WGS_STATE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wgs/geometry.hpp"

namespace wgs {

using cplx = std::complex<double>;

/// Single-qubit amplitudes (a(0), a(1)) for every site of a product state.
class ProductInput {
 public:
  using Amplitudes = std::array<cplx, 2>;

  /// |+> on every site.
  static ProductInput plus(std::size_t n);
  static ProductInput uniform(std::size_t n, Amplitudes amps);
  /// Bloch-sphere state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> on every site.
  static ProductInput bloch(std::size_t n, double theta, double phi);
  static ProductInput random(std::size_t n, std::mt19937_64 &rng);

  explicit ProductInput(std::vector<Amplitudes> amps);

  std::size_t size() const noexcept { return amps_.size(); }
  const Amplitudes &operator[](Site k) const { return amps_[k]; }
  const Amplitudes &at(Site k) const;

 private:
  std::vector<Amplitudes> amps_;
};

/// Ordered list of distinct sites. The first listed site is the most
/// significant bit of a basis index x in [0, 2^|A|).
class SiteSubset {
 public:
  SiteSubset(std::vector<Site> sites, std::size_t lattice_size);
  SiteSubset(std::initializer_list<Site> sites, std::size_t lattice_size)
      : SiteSubset(std::vector<Site>(sites), lattice_size) {}

  /// Contiguous run first, first+1, ..., first+length-1.
  static SiteSubset range(Site first, std::size_t length, std::size_t lattice_size);

  std::size_t size() const noexcept { return sites_.size(); }
  std::size_t lattice_size() const noexcept { return lattice_size_; }
  const std::vector<Site> &sites() const noexcept { return sites_; }
  Site operator[](std::size_t i) const { return sites_[i]; }
  bool contains(Site site) const noexcept;

  /// Bit position of the i-th listed site inside a basis index.
  unsigned bit(std::size_t i) const noexcept {
    return static_cast<unsigned>(sites_.size() - 1 - i);
  }

  /// All sites not in the subset, ascending.
  std::vector<Site> complement() const;

 private:
  std::vector<Site> sites_;
  std::size_t lattice_size_;
};

/// Hermitian unit-trace matrix over 2^n basis states.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd data);

  static DensityMatrix maximally_mixed(std::size_t qubits);
  /// |psi><psi| for a (not necessarily normalized) vector; normalizes.
  static DensityMatrix pure(const Eigen::VectorXcd &psi);

  std::size_t qubits() const noexcept { return qubits_; }
  Eigen::Index dim() const noexcept { return data_.rows(); }
  const Eigen::MatrixXcd &matrix() const noexcept { return data_; }
  cplx operator()(Eigen::Index x, Eigen::Index y) const { return data_(x, y); }

  cplx trace() const { return data_.trace(); }
  double hermiticity_error() const;
  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

  /// Traces out every qubit not listed in `keep` (positions into this matrix's
  /// qubit order, first = most significant). Order of `keep` is preserved.
  DensityMatrix partial_trace(std::span<const std::size_t> keep) const;

 private:
  Eigen::MatrixXcd data_;
  std::size_t qubits_;
};

/// (1/2) sum |eig(a - b)|.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace wgs

#endif  // WGS_STATE_HPP
