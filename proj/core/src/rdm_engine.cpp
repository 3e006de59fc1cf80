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

#include "wgs/rdm_engine.hpp"

#include <cmath>
#include <string>

#include "wgs/error.hpp"
#include "wgs/parallel.hpp"

namespace wgs {

namespace {

// Environment sites per work chunk never drop below this, and there are never
// more than kMaxChunks chunks. Both depend only on |B|, so the reduction order
// (and hence every bit of the result) is independent of the thread count.
constexpr std::size_t kMinChunk = 1024;
constexpr std::size_t kMaxChunks = 32;
constexpr std::size_t kFlushInterval = 32;
constexpr double kFlushBelow = 1e-290;

std::size_t pow3(std::size_t n) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p;
}

void check_environment(const SiteSubset &subset, std::span<const Site> environment) {
  std::vector<bool> seen(subset.lattice_size(), false);
  for (auto s : subset.sites()) seen[s] = true;
  for (auto l : environment) {
    if (l >= subset.lattice_size()) {
      throw Error(Errc::invalid_site, "environment site " + std::to_string(l) + " out of range");
    }
    if (seen[l]) {
      throw Error(Errc::invalid_argument,
                  "environment site " + std::to_string(l) + " repeated or inside the subset");
    }
    seen[l] = true;
  }
}

void check_sizes(const PhaseProfile &profile, const ProductInput &input, const SiteSubset &subset) {
  if (input.size() != profile.size() || subset.lattice_size() != profile.size()) {
    throw Error(Errc::dimension_mismatch, "profile, input and subset disagree on the number of sites");
  }
}

// One chunk of the sweep: accumulates prod_l (p0 + p1 w_l(d)) for every class d
// into (re, im), which must be pre-filled with 1.
void sweep_chunk(const PhaseProfile &profile, const ProductInput &input, const SiteSubset &subset,
                 std::span<const Site> sites, std::vector<double> &re, std::vector<double> &im) {
  const std::size_t n = subset.size();
  const std::size_t classes = re.size();
  std::vector<double> wr(classes), wi(classes);
  std::size_t since_flush = 0;
  for (const Site l : sites) {
    const double p0 = std::norm(input[l][0]);
    const double p1 = std::norm(input[l][1]);
    if (p1 == 0.0) continue;

    // w(d) = prod_i exp(-i phi_{A_i l} d_i), built digit by digit.
    wr[0] = 1.0;
    wi[0] = 0.0;
    std::size_t block = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = profile.phase_unchecked(subset[i], l);
      const double zr = std::cos(phi);
      const double zi = -std::sin(phi);
      for (std::size_t j = 0; j < block; ++j) {
        const double ar = wr[j], ai = wi[j];
        wr[j + block] = ar * zr - ai * zi;
        wi[j + block] = ar * zi + ai * zr;
        wr[j + 2 * block] = ar * zr + ai * zi;
        wi[j + 2 * block] = ai * zr - ar * zi;
      }
      block *= 3;
    }

    for (std::size_t c = 0; c < classes; ++c) {
      const double fr = p0 + p1 * wr[c];
      const double fi = p1 * wi[c];
      const double ar = re[c], ai = im[c];
      re[c] = ar * fr - ai * fi;
      im[c] = ar * fi + ai * fr;
    }

    if (++since_flush == kFlushInterval) {
      since_flush = 0;
      for (std::size_t c = 0; c < classes; ++c) {
        if (std::abs(re[c]) + std::abs(im[c]) < kFlushBelow) re[c] = im[c] = 0.0;
      }
    }
  }
}

DensityMatrix assemble(const PhaseProfile &profile, const ProductInput &input,
                       const SiteSubset &subset, const std::vector<cplx> &env,
                       bool include_internal) {
  const std::size_t n = subset.size();
  const std::size_t dim = std::size_t{1} << n;

  // ternary[x] = sum_i x_i 3^i; amp[x] = prod_i a_{A_i}(x_i), times the
  // intra-block phase exp(-i theta(x)) when requested.
  std::vector<std::size_t> ternary(dim, 0);
  std::vector<cplx> amp(dim, cplx(1.0));
  std::vector<double> internal(n * n, 0.0);
  if (include_internal) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) internal[i * n + j] = profile.phase_unchecked(subset[i], subset[j]);
    }
  }
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t t = 0, weight = 1;
    double theta = 0.0;
    for (std::size_t i = 0; i < n; ++i, weight *= 3) {
      const unsigned xi = (x >> subset.bit(i)) & 1U;
      t += xi * weight;
      amp[x] *= input[subset[i]][xi];
      if (include_internal && xi) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if ((x >> subset.bit(j)) & 1U) theta += internal[i * n + j];
        }
      }
    }
    ternary[x] = t;
    if (include_internal) amp[x] *= std::polar(1.0, -theta);
  }

  Eigen::MatrixXcd rho(dim, dim);
  for (std::size_t y = 0; y < dim; ++y) {
    const cplx ay = std::conj(amp[y]);
    for (std::size_t x = 0; x < dim; ++x) {
      const std::size_t code = ternary[x] + 2 * ternary[y] - 3 * ternary[x & y];
      rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = amp[x] * ay * env[code];
    }
  }
  const double tr = rho.trace().real();
  rho /= tr;
  return DensityMatrix(std::move(rho));
}

}  // namespace

std::vector<cplx> environment_classes(const PhaseProfile &profile, const ProductInput &input,
                                      const SiteSubset &subset,
                                      std::span<const Site> environment,
                                      const EngineOptions &options) {
  check_sizes(profile, input, subset);
  check_environment(subset, environment);
  const std::size_t classes = pow3(subset.size());

  const std::size_t total = environment.size();
  std::size_t chunk = std::max(kMinChunk, (total + kMaxChunks - 1) / kMaxChunks);
  const std::size_t chunks = total == 0 ? 0 : (total + chunk - 1) / chunk;

  std::vector<std::vector<double>> re(chunks), im(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    re[c].assign(classes, 1.0);
    im[c].assign(classes, 0.0);
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    sweep_chunk(profile, input, subset, environment.subspan(begin, end - begin), re[c], im[c]);
  });

  std::vector<cplx> out(classes, cplx(1.0));
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t d = 0; d < classes; ++d) out[d] *= cplx(re[c][d], im[c][d]);
  }
  // d = 0 is prod_l (|a_l(0)|^2 + |a_l(1)|^2), one by normalization of the input.
  out[0] = cplx(1.0);
  return out;
}

cplx environment_factor(const PhaseProfile &profile, const ProductInput &input,
                        const SiteSubset &subset, std::span<const Site> environment,
                        std::size_t x, std::size_t y) {
  check_sizes(profile, input, subset);
  check_environment(subset, environment);
  const std::size_t dim = std::size_t{1} << subset.size();
  if (x >= dim || y >= dim) {
    throw Error(Errc::invalid_argument, "basis index outside the subset's 2^|A| states");
  }
  cplx product(1.0);
  if (x == y) return product;
  for (const Site l : environment) {
    double delta = 0.0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const int d = static_cast<int>((x >> subset.bit(i)) & 1U) - static_cast<int>((y >> subset.bit(i)) & 1U);
      if (d != 0) delta += d * profile.phase_unchecked(subset[i], l);
    }
    product *= std::norm(input[l][0]) + std::norm(input[l][1]) * std::polar(1.0, -delta);
  }
  return product;
}

cplx environment_factor(const PhaseProfile &profile, const ProductInput &input,
                        const SiteSubset &subset, std::size_t x, std::size_t y) {
  const auto environment = subset.complement();
  return environment_factor(profile, input, subset, environment, x, y);
}

DensityMatrix reduced_density(const PhaseProfile &profile, const ProductInput &input,
                              const SiteSubset &subset, std::span<const Site> environment,
                              bool include_internal, const EngineOptions &options) {
  if (subset.size() > options.max_subset) {
    throw Error(Errc::subset_too_large, "subset of " + std::to_string(subset.size()) +
                                            " sites exceeds the limit of " +
                                            std::to_string(options.max_subset));
  }
  const auto env = environment_classes(profile, input, subset, environment, options);
  return assemble(profile, input, subset, env, include_internal);
}

DensityMatrix reduced_density(const PhaseProfile &profile, const ProductInput &input,
                              const SiteSubset &subset, bool include_internal,
                              const EngineOptions &options) {
  if (subset.size() > options.max_subset) {
    throw Error(Errc::subset_too_large, "subset of " + std::to_string(subset.size()) +
                                            " sites exceeds the limit of " +
                                            std::to_string(options.max_subset));
  }
  const auto environment = subset.complement();
  return reduced_density(profile, input, subset, environment, include_internal, options);
}

cplx single_site_coherence(const PhaseProfile &profile, Site k) {
  profile.lattice().check_site(k);
  double magnitude = 1.0;
  // Neumaier-compensated sum of phi_kl / 2.
  double sum = 0.0, carry = 0.0;
  for (Site l = 0; l < profile.size(); ++l) {
    if (l == k) continue;
    const double half = 0.5 * profile.phase_unchecked(k, l);
    magnitude *= std::cos(half);
    const double t = sum + half;
    carry += std::abs(sum) >= std::abs(half) ? (sum - t) + half : (half - t) + sum;
    sum = t;
  }
  const double total = sum + carry;
  return cplx(std::cos(total), -std::sin(total)) * magnitude;
}

}  // namespace wgs
