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

#include "ncsr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ncsr/errors.hpp"
#include "ncsr/lapack.hpp"

namespace ncsr {

double Rng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Cplx Rng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return Cplx(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw InvalidInputError("Rng::uniform_int: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x = eng_();
  while (x > limit) x = eng_();
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed;
  for (std::uint64_t w : {a, b}) {
    z += 0x9e3779b97f4a7c15ULL + w;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
  }
  return z;
}

Mat ginibre(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = rng.cgauss();
  }
  return g;
}

Mat haar_unitary(int n, Rng& rng) {
  Mat g = ginibre(n, n, rng);
  lapack::QrThin qr = lapack::qr_thin(g);
  // Multiply column j by the phase of r_jj so the distribution is Haar
  // rather than biased by the sign convention of the factorization.
  for (int j = 0; j < n; ++j) {
    Cplx r = qr.rdiag[static_cast<std::size_t>(j)];
    double mag = std::abs(r);
    Cplx phase = (mag > 0.0) ? r / mag : Cplx(1.0, 0.0);
    for (int i = 0; i < n; ++i) qr.q(i, j) *= phase;
  }
  return qr.q;
}

std::vector<int> sample_subset(int n, int s, Rng& rng) {
  if (s < 0 || s > n) throw InvalidInputError("sample_subset: need 0 <= s <= n");
  // Partial Fisher-Yates on an index pool.
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < s; ++i) {
    const int j = i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncsr
