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

#include "wgs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wgs/error.hpp"

namespace wgs {

const char *errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_site: return "invalid site";
    case Errc::invalid_pair: return "invalid pair";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::subset_too_large: return "subset too large";
    case Errc::not_a_graph_state: return "not a graph state";
    case Errc::not_positive_semidefinite: return "not positive semidefinite";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::too_large: return "too large";
    case Errc::config: return "config error";
  }
  return "error";
}

Lattice::Lattice(std::vector<std::size_t> extents, std::vector<Boundary> boundary)
    : extents_(std::move(extents)), boundary_(std::move(boundary)) {
  if (extents_.empty()) {
    throw Error(Errc::invalid_argument, "lattice needs at least one axis");
  }
  if (boundary_.size() == 1 && extents_.size() > 1) {
    boundary_.assign(extents_.size(), boundary_.front());
  }
  if (boundary_.size() != extents_.size()) {
    throw Error(Errc::invalid_argument, "boundary list must have one entry or one per axis");
  }
  size_ = 1;
  for (auto e : extents_) {
    if (e == 0) throw Error(Errc::invalid_argument, "lattice extents must be positive");
    size_ *= e;
  }
  if (size_ < 2) throw Error(Errc::invalid_argument, "lattice needs at least two sites");
  strides_.assign(extents_.size(), 1);
  for (std::size_t axis = extents_.size() - 1; axis > 0; --axis) {
    strides_[axis - 1] = strides_[axis] * extents_[axis];
  }
}

Lattice Lattice::chain(std::size_t n, Boundary boundary) { return Lattice({n}, {boundary}); }

void Lattice::check_site(Site site) const {
  if (site >= size_) {
    throw Error(Errc::invalid_site,
                "site " + std::to_string(site) + " outside lattice of " + std::to_string(size_));
  }
}

std::vector<std::size_t> Lattice::coordinates(Site site) const {
  check_site(site);
  std::vector<std::size_t> coords(extents_.size());
  for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
    coords[axis] = site / strides_[axis];
    site %= strides_[axis];
  }
  return coords;
}

Site Lattice::site_at(std::span<const std::size_t> coords) const {
  if (coords.size() != extents_.size()) {
    throw Error(Errc::invalid_site, "coordinate rank does not match lattice dimension");
  }
  Site site = 0;
  for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
    if (coords[axis] >= extents_[axis]) throw Error(Errc::invalid_site, "coordinate out of range");
    site += coords[axis] * strides_[axis];
  }
  return site;
}

double Lattice::squared_distance(Site k, Site l) const {
  double sum = 0.0;
  for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
    const auto ck = static_cast<std::int64_t>(k / strides_[axis]);
    const auto cl = static_cast<std::int64_t>(l / strides_[axis]);
    k %= strides_[axis];
    l %= strides_[axis];
    auto delta = static_cast<std::int64_t>(std::llabs(ck - cl));
    if (boundary_[axis] == Boundary::periodic) {
      delta = std::min<std::int64_t>(delta, static_cast<std::int64_t>(extents_[axis]) - delta);
    }
    sum += static_cast<double>(delta * delta);
  }
  return sum;
}

double Lattice::distance(Site k, Site l) const {
  check_site(k);
  check_site(l);
  return std::sqrt(squared_distance(k, l));
}

double Lattice::diameter() const {
  double sum = 0.0;
  for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
    const auto e = static_cast<double>(extents_[axis]);
    const double span = boundary_[axis] == Boundary::periodic ? std::floor(e / 2) : e - 1;
    sum += span * span;
  }
  return std::sqrt(sum);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1), never exactly 0 so the Gaussian log is finite.
double unit_interval(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

double Disorder::sample(Site k, Site l) const noexcept {
  const auto lo = static_cast<std::uint64_t>(std::min(k, l));
  const auto hi = static_cast<std::uint64_t>(std::max(k, l));
  const std::uint64_t key = splitmix64(splitmix64(seed ^ splitmix64(lo)) ^ hi);
  const double u1 = unit_interval(key);
  if (kind == Kind::uniform) return a + (b - a) * u1;
  const double u2 = unit_interval(splitmix64(key));
  const double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return a + b * g;
}

CouplingLaw::CouplingLaw(BaseLaw base, std::optional<Disorder> disorder)
    : base_(std::move(base)), disorder_(disorder) {
  if (const auto *p = std::get_if<PowerLaw>(&base_); p && !(p->alpha > 0)) {
    throw Error(Errc::invalid_argument, "power law needs alpha > 0");
  }
  if (const auto *e = std::get_if<ExponentialLaw>(&base_); e && !(e->kappa > 0)) {
    throw Error(Errc::invalid_argument, "exponential law needs kappa > 0");
  }
  if (const auto *c = std::get_if<CutoffLaw>(&base_); c && !(c->lambda >= 0)) {
    throw Error(Errc::invalid_argument, "cutoff law needs lambda >= 0");
  }
  if (auto *t = std::get_if<TableLaw>(&base_)) {
    std::sort(t->entries.begin(), t->entries.end());
    for (const auto &[r, f] : t->entries) {
      if (!(r > 0) || !std::isfinite(f)) {
        throw Error(Errc::invalid_argument, "table law needs positive distances and finite strengths");
      }
    }
  }
  if (disorder_ && disorder_->kind == Disorder::Kind::gaussian && !(disorder_->b >= 0)) {
    throw Error(Errc::invalid_argument, "gaussian disorder needs sigma >= 0");
  }
}

double CouplingLaw::base_strength(double r) const {
  struct Visitor {
    double r;
    double operator()(const PowerLaw &p) const { return std::pow(r, -p.alpha); }
    double operator()(const ExponentialLaw &e) const { return std::exp(-e.kappa * r); }
    double operator()(const CutoffLaw &c) const { return r <= c.lambda + 1e-12 ? 1.0 : 0.0; }
    double operator()(const TableLaw &t) const {
      const double tol = 1e-9 * std::max(1.0, r);
      auto it = std::lower_bound(t.entries.begin(), t.entries.end(), r - tol,
                                 [](const auto &entry, double v) { return entry.first < v; });
      if (it != t.entries.end() && std::abs(it->first - r) <= tol) return it->second;
      return 0.0;
    }
  };
  return std::visit(Visitor{r}, base_);
}

double CouplingLaw::strength(double r, Site k, Site l) const {
  const double f = base_strength(r);
  return disorder_ ? f * disorder_->sample(k, l) : f;
}

std::string CouplingLaw::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto &law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PowerLaw>) {
          os << "power(alpha=" << law.alpha << ")";
        } else if constexpr (std::is_same_v<T, ExponentialLaw>) {
          os << "exponential(kappa=" << law.kappa << ")";
        } else if constexpr (std::is_same_v<T, CutoffLaw>) {
          os << "cutoff(lambda=" << law.lambda << ")";
        } else {
          os << "table(" << law.entries.size() << " entries)";
        }
      },
      base_);
  if (disorder_) {
    os << "*" << (disorder_->kind == Disorder::Kind::uniform ? "uniform" : "gaussian") << "("
       << disorder_->a << "," << disorder_->b << ",seed=" << disorder_->seed << ")";
  }
  return os.str();
}

double reduce_angle(double angle) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

PhaseProfile::PhaseProfile(Lattice lattice, CouplingLaw law, double time)
    : lattice_(std::move(lattice)), law_(std::move(law)), time_(time) {
  if (!(time_ >= 0) || !std::isfinite(time_)) {
    throw Error(Errc::invalid_argument, "evolution time must be finite and non-negative");
  }
}

double PhaseProfile::phase_unchecked(Site k, Site l) const noexcept {
  const double r = std::sqrt(lattice_.squared_distance(k, l));
  return reduce_angle(law_.strength(r, k, l) * time_);
}

double PhaseProfile::phase(Site k, Site l) const {
  lattice_.check_site(k);
  lattice_.check_site(l);
  if (k == l) throw Error(Errc::invalid_pair, "phase of a site with itself is undefined");
  return phase_unchecked(k, l);
}

double distance(const Lattice &lattice, Site k, Site l) { return lattice.distance(k, l); }

double phase(const PhaseProfile &profile, Site k, Site l) { return profile.phase(k, l); }

}  // namespace wgs
