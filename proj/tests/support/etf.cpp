// Copyright 2026 The ncsr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/etf.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ncsr/errors.hpp"
#include "ncsr/rng.hpp"

namespace ncsr::testsupport {

ncsr::ModularFrame lifted_simplex_etf(int k, int n, std::uint64_t seed) {
  if (k < 1 || n < 3) throw ncsr::InvalidInputError("lifted_simplex_etf: need k >= 1, n >= 3");
  const int m = n - 1;

  // u_j(i) = omega^{(i+1) j} / sqrt(n-1), the DFT matrix with the constant
  // row removed; <u_j, u_l> = -1/(n-1) off the diagonal.
  std::vector<std::vector<Cplx>> u(static_cast<std::size_t>(n),
                                   std::vector<Cplx>(static_cast<std::size_t>(m)));
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>((i + 1) * j % n) / n;
      u[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          scale * Cplx(std::cos(phase), std::sin(phase));
    }
  }

  ncsr::Rng rng(ncsr::mix_seed(seed, 0x657466, (static_cast<std::uint64_t>(k) << 32) |
                                                   static_cast<std::uint64_t>(n)));
  const Mat w = ncsr::haar_unitary(m * k, rng);

  std::vector<ncsr::ModuleVector> vectors;
  vectors.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Mat q = ncsr::haar_unitary(k, rng);
    std::vector<Mat> blocks(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      // row concatenation [tau_{j,1} ... tau_{j,m}] right-multiplied by w,
      // with tau_{j,i'} = u_j(i') I_k
      Mat acc(k, k);
      for (int ip = 0; ip < m; ++ip) {
        const Cplx coeff = u[static_cast<std::size_t>(j)][static_cast<std::size_t>(ip)];
        for (int c = 0; c < k; ++c) {
          for (int r = 0; r < k; ++r) acc(r, c) += coeff * w(ip * k + r, i * k + c);
        }
      }
      blocks[static_cast<std::size_t>(i)] = q * acc;
    }
    vectors.emplace_back(k, std::move(blocks));
  }
  return ncsr::ModularFrame(k, m, std::move(vectors));
}

}  // namespace ncsr::testsupport
