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

#ifndef NCSR_NSP_HPP_
#define NCSR_NSP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ncsr/blockvec.hpp"
#include "ncsr/frame.hpp"

namespace ncsr {

// Null space property of order s: every nonzero kernel element of the
// synthesis map carries strictly less than half its block 1-norm on any s
// blocks.  A witness is a kernel element and support that violate this.
struct NspWitness {
  CoefficientVector d;
  SupportSet m;
  double lhs = 0.0;  // norm1(restrict(d, m))
  double rhs = 0.0;  // 0.5 * norm1(d)
  int order = 0;
};

// Orthonormal basis (flattened Euclidean sense) of the null space of the
// flattened synthesis matrix.
std::vector<CoefficientVector> kernel_basis(const ModularFrame& f, double rank_tol = 1e-10);

// Indices of the `order` largest blocks by operator norm, ties broken by
// lower index; maximizes norm1(restrict(d, m)) over all |m| <= order.
SupportSet worst_support(const CoefficientVector& d, int order);

// Searches kernel basis vectors, their pairwise sums and differences, and
// num_samples random unit-sphere combinations for an NSP violation at the
// given order.  A witness disproves NSP; none found is not a certificate.
std::optional<NspWitness> nsp_falsify(const ModularFrame& f, int order, int num_samples,
                                      std::uint64_t seed);

// Margin kept between a certified order and the coherence bound; orders
// within rounding distance of the boundary are not certified.
inline constexpr double kCertificateSlack = 1e-9;

// True iff order + kCertificateSlack < (1 + 1/mu)/2, which proves NSP of
// that order.  False is inconclusive.
bool nsp_coherence_certificate(const ModularFrame& f, int order);

struct NonuniquenessPair {
  ModuleVector x;
  CoefficientVector c;  // restrict(d, M): sparse representation
  CoefficientVector b;  // -restrict(d, complement): competitor, norm1(b) <= norm1(c)
};

// Turns an NSP violation into two representations of the same module
// vector, the competitor no more expensive in block 1-norm than the sparse
// one.  Throws InvalidInputError when the witness is inconsistent with f.
NonuniquenessPair nonuniqueness_witness(const ModularFrame& f, const NspWitness& w);

}  // namespace ncsr

#endif  // NCSR_NSP_HPP_
