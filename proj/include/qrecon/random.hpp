// Copyright 2026 The qrecon Authors
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

#pragma once

#include "qrecon/common.hpp"

#include <cmath>
#include <random>

namespace qrecon {

using Rng = std::mt19937_64;

/// Independent, reproducible stream for sample `index` of a run seeded with `seed`.
inline Rng stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Normalised complex standard-normal vector: Haar-distributed pure state.
inline CVector haar_state(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector psi(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < psi.size(); ++k) psi(k) = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  return psi;
}

/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases
/// absorbed into Q.
inline CMatrix haar_unitary(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    q.col(k) *= a > 0 ? d / a : Complex(1, 0);
  }
  return q;
}

/// Uniform weights on the simplex (flat Dirichlet).
inline RVector simplex_weights(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RVector w(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < w.size(); ++k) w(k) = expo(rng);
  return w / w.sum();
}

}  // namespace qrecon
