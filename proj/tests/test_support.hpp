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

#ifndef WGS_TESTS_TEST_SUPPORT_HPP
#define WGS_TESTS_TEST_SUPPORT_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gtest/gtest.h"

#include "wgs/error.hpp"
#include "wgs/geometry.hpp"
#include "wgs/state.hpp"

namespace wgs::testing {

template <class F>
void expect_errc(Errc code, F &&f) {
  try {
    f();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Literal circuit: start from the product state and apply each
/// diag(1, 1, 1, e^{-i phi}) gate in turn. Site 0 is the most significant bit.
inline Eigen::VectorXcd apply_gates(const PhaseProfile &profile, const ProductInput &input) {
  const std::size_t n = profile.size();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    std::complex<double> a = 1.0;
    for (std::size_t k = 0; k < n; ++k) a *= input[k][(x >> (n - 1 - k)) & 1U];
    psi[static_cast<Eigen::Index>(x)] = a;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const auto gate = std::polar(1.0, -profile.phase(k, l));
      const std::size_t mask = (std::size_t{1} << (n - 1 - k)) | (std::size_t{1} << (n - 1 - l));
      for (std::size_t x = 0; x < dim; ++x) {
        if ((x & mask) == mask) psi[static_cast<Eigen::Index>(x)] *= gate;
      }
    }
  }
  return psi;
}

inline void expect_valid_density(const DensityMatrix &rho) {
  EXPECT_LT(rho.hermiticity_error(), 1e-12);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(rho.trace().imag(), 0.0, 1e-12);
  EXPECT_GE(rho.eigenvalues().minCoeff(), -1e-10);
}

}  // namespace wgs::testing

#endif  // WGS_TESTS_TEST_SUPPORT_HPP
