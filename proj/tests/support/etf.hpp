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

#ifndef NCSR_TESTS_SUPPORT_ETF_HPP_
#define NCSR_TESTS_SUPPORT_ETF_HPP_

#include <cstdint>

#include "ncsr/frame.hpp"

namespace ncsr::testsupport {

// Unit frame in A^{n-1} with n vectors and coherence exactly 1/(n-1): the
// classical simplex equiangular tight frame (punctured DFT columns) lifted
// blockwise as u_j(i) I_k, then scrambled by a common right rotation and
// per-vector left rotations, both of which leave the Gram block norms
// unchanged.  Low-coherence ground truth for multi-block recovery runs that
// random frames cannot reach at small n.
ncsr::ModularFrame lifted_simplex_etf(int k, int n, std::uint64_t seed);

}  // namespace ncsr::testsupport

#endif  // NCSR_TESTS_SUPPORT_ETF_HPP_
