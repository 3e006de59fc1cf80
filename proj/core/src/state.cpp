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

#include "wgs/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "wgs/error.hpp"

namespace wgs {

namespace {
constexpr double kNormTolerance = 1e-12;
}

ProductInput::ProductInput(std::vector<Amplitudes> amps) : amps_(std::move(amps)) {
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    const double norm = std::norm(amps_[k][0]) + std::norm(amps_[k][1]);
    if (std::abs(norm - 1.0) > kNormTolerance) {
      throw Error(Errc::invalid_argument,
                  "input amplitudes of site " + std::to_string(k) + " are not normalized");
    }
  }
}

ProductInput ProductInput::plus(std::size_t n) {
  const double h = std::sqrt(0.5);
  return uniform(n, {cplx(h), cplx(h)});
}

ProductInput ProductInput::uniform(std::size_t n, Amplitudes amps) {
  return ProductInput(std::vector<Amplitudes>(n, amps));
}

ProductInput ProductInput::bloch(std::size_t n, double theta, double phi) {
  return uniform(n, {cplx(std::cos(theta / 2)), std::polar(std::sin(theta / 2), phi)});
}

ProductInput ProductInput::random(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitudes> amps(n);
  for (auto &a : amps) {
    a = {cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng))};
    const double norm = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    a[0] /= norm;
    a[1] /= norm;
  }
  return ProductInput(std::move(amps));
}

const ProductInput::Amplitudes &ProductInput::at(Site k) const {
  if (k >= amps_.size()) throw Error(Errc::invalid_site, "input has no site " + std::to_string(k));
  return amps_[k];
}

SiteSubset::SiteSubset(std::vector<Site> sites, std::size_t lattice_size)
    : sites_(std::move(sites)), lattice_size_(lattice_size) {
  if (sites_.empty()) throw Error(Errc::invalid_argument, "subset must not be empty");
  auto sorted = sites_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_argument, "subset sites must be distinct");
  }
  if (sorted.back() >= lattice_size_) {
    throw Error(Errc::invalid_site, "subset site " + std::to_string(sorted.back()) +
                                        " outside lattice of " + std::to_string(lattice_size_));
  }
}

SiteSubset SiteSubset::range(Site first, std::size_t length, std::size_t lattice_size) {
  std::vector<Site> sites(length);
  for (std::size_t i = 0; i < length; ++i) sites[i] = first + i;
  return SiteSubset(std::move(sites), lattice_size);
}

bool SiteSubset::contains(Site site) const noexcept {
  return std::find(sites_.begin(), sites_.end(), site) != sites_.end();
}

std::vector<Site> SiteSubset::complement() const {
  std::vector<bool> in(lattice_size_, false);
  for (auto s : sites_) in[s] = true;
  std::vector<Site> out;
  out.reserve(lattice_size_ - sites_.size());
  for (Site s = 0; s < lattice_size_; ++s) {
    if (!in[s]) out.push_back(s);
  }
  return out;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
  const auto n = static_cast<std::size_t>(data_.rows());
  if (data_.rows() != data_.cols() || n == 0 || !std::has_single_bit(n)) {
    throw Error(Errc::dimension_mismatch, "density matrix must be square with power-of-two size");
  }
  qubits_ = static_cast<std::size_t>(std::countr_zero(n));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd &psi) {
  const Eigen::VectorXcd v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

double DensityMatrix::hermiticity_error() const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(data_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix DensityMatrix::partial_trace(std::span<const std::size_t> keep) const {
  const std::size_t n = qubits_;
  for (auto q : keep) {
    if (q >= n) throw Error(Errc::invalid_argument, "partial trace qubit out of range");
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  if (traced.size() + keep.size() != n) {
    throw Error(Errc::invalid_argument, "partial trace qubits must be distinct");
  }
  const auto bit_of = [n](std::size_t q) { return n - 1 - q; };
  // Scatter an index over the kept / traced qubits into a full basis index.
  const auto expand = [&](std::size_t kept_index, std::size_t traced_index) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if ((kept_index >> (keep.size() - 1 - i)) & 1U) full |= std::size_t{1} << bit_of(keep[i]);
    }
    for (std::size_t i = 0; i < traced.size(); ++i) {
      if ((traced_index >> i) & 1U) full |= std::size_t{1} << bit_of(traced[i]);
    }
    return full;
  };
  const std::size_t out_dim = std::size_t{1} << keep.size();
  const std::size_t env_dim = std::size_t{1} << traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  for (std::size_t x = 0; x < out_dim; ++x) {
    for (std::size_t y = 0; y < out_dim; ++y) {
      cplx sum = 0;
      for (std::size_t b = 0; b < env_dim; ++b) sum += data_(expand(x, b), expand(y, b));
      out(x, y) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) throw Error(Errc::dimension_mismatch, "trace distance of unequal sizes");
  const Eigen::MatrixXcd diff = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace wgs
