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

#ifndef NCSR_RNG_HPP_
#define NCSR_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ncsr/types.hpp"

namespace ncsr {

// mt19937_64 with hand-rolled output transforms.  std::normal_distribution
// and friends are implementation-defined, which would break byte-identical
// reruns across standard libraries, so the transforms live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();
  // Standard normal via Box-Muller (caches the spare deviate).
  double gauss();
  // Standard complex normal: E|z|^2 = 1.
  Cplx cgauss();
  // Uniform on {0, ..., bound - 1} by rejection.
  std::uint64_t uniform_int(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer over (seed, a, b); decorrelates derived stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Matrix with iid standard complex normal entries, filled column-major.
Mat ginibre(int rows, int cols, Rng& rng);

// Haar-distributed unitary of order n: QR of a Ginibre matrix with the
// R-diagonal phase correction.
Mat haar_unitary(int n, Rng& rng);

// Uniformly random s-subset of {0, ..., n-1}, sorted.
std::vector<int> sample_subset(int n, int s, Rng& rng);

}  // namespace ncsr

#endif  // NCSR_RNG_HPP_
