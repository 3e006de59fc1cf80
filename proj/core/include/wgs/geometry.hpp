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

#ifndef WGS_GEOMETRY_HPP
#define WGS_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wgs {

using Site = std::size_t;

enum class Boundary { open, periodic };

/// Regular d-dimensional lattice of N = prod(extents) sites.
///
/// Sites are linearized row-major with axis 0 slowest: for extents
/// (E0, E1, ..., E{d-1}) the coordinate (c0, ..., c{d-1}) maps to
/// ((c0 * E1 + c1) * E2 + c2) ... . Distances are Euclidean norms of the
/// coordinate difference, where a periodic axis of extent E uses
/// min(|delta|, E - |delta|).
class Lattice {
 public:
  /// `boundary` may hold one entry (applied to every axis) or one per axis.
  Lattice(std::vector<std::size_t> extents, std::vector<Boundary> boundary);

  static Lattice chain(std::size_t n, Boundary boundary = Boundary::open);

  std::size_t dimension() const noexcept { return extents_.size(); }
  std::size_t size() const noexcept { return size_; }
  const std::vector<std::size_t> &extents() const noexcept { return extents_; }
  Boundary boundary(std::size_t axis) const { return boundary_.at(axis); }

  std::vector<std::size_t> coordinates(Site site) const;
  Site site_at(std::span<const std::size_t> coords) const;

  double distance(Site k, Site l) const;
  double squared_distance(Site k, Site l) const;

  /// Largest pairwise distance on the lattice.
  double diameter() const;

  void check_site(Site site) const;

 private:
  std::vector<std::size_t> extents_;
  std::vector<Boundary> boundary_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

struct PowerLaw {
  double alpha;
};

struct ExponentialLaw {
  double kappa;
};

struct CutoffLaw {
  double lambda;
};

/// Explicit strength per distance. Distances not listed couple with strength 0.
struct TableLaw {
  std::vector<std::pair<double, double>> entries;
};

using BaseLaw = std::variant<PowerLaw, ExponentialLaw, CutoffLaw, TableLaw>;

/// Random multiplicative amplitude xi_kl applied on top of a base law:
/// f(k,l) = base(r_kl) * xi_kl. The value of xi_kl is a pure function of
/// (seed, min(k,l), max(k,l)) so nothing is stored.
struct Disorder {
  enum class Kind { uniform, gaussian };
  Kind kind = Kind::uniform;
  double a = 0.0;  // uniform: lower bound; gaussian: mean
  double b = 1.0;  // uniform: upper bound; gaussian: standard deviation
  std::uint64_t seed = 0;

  double sample(Site k, Site l) const noexcept;
};

class CouplingLaw {
 public:
  CouplingLaw(BaseLaw base, std::optional<Disorder> disorder = std::nullopt);

  static CouplingLaw power(double alpha) { return CouplingLaw(PowerLaw{alpha}); }
  static CouplingLaw exponential(double kappa) { return CouplingLaw(ExponentialLaw{kappa}); }
  static CouplingLaw cutoff(double lambda) { return CouplingLaw(CutoffLaw{lambda}); }

  const BaseLaw &base() const noexcept { return base_; }
  const std::optional<Disorder> &disorder() const noexcept { return disorder_; }

  /// Distance-only part f(r).
  double base_strength(double r) const;

  /// Full coupling f(k,l) given the pair distance.
  double strength(double r, Site k, Site l) const;

  std::string describe() const;

 private:
  BaseLaw base_;
  std::optional<Disorder> disorder_;
};

/// Lattice + coupling law + evolution time. Phases are computed on demand;
/// nothing of size N x N is ever stored.
class PhaseProfile {
 public:
  PhaseProfile(Lattice lattice, CouplingLaw law, double time);

  const Lattice &lattice() const noexcept { return lattice_; }
  const CouplingLaw &law() const noexcept { return law_; }
  double time() const noexcept { return time_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  /// f(r_kl) t reduced into [0, 2 pi).
  double phase(Site k, Site l) const;

  /// Same as phase() without index validation. For hot loops whose indices
  /// are already known to be distinct and in range.
  double phase_unchecked(Site k, Site l) const noexcept;

  PhaseProfile with_time(double time) const { return PhaseProfile(lattice_, law_, time); }

 private:
  Lattice lattice_;
  CouplingLaw law_;
  double time_;
};

double distance(const Lattice &lattice, Site k, Site l);
double phase(const PhaseProfile &profile, Site k, Site l);

/// Maps an angle into [0, 2 pi).
double reduce_angle(double angle) noexcept;

}  // namespace wgs

#endif  // WGS_GEOMETRY_HPP
