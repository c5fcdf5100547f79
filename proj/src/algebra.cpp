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

#include "ncsr/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "ncsr/errors.hpp"

namespace ncsr {

double op_norm(const Mat& a) {
  if (!all_finite(a)) throw InvalidInputError("op_norm: non-finite entries");
  const int k = a.rows();
  if (k == 1 && a.cols() == 1) return std::abs(a(0, 0));
  if (k == 2 && a.cols() == 2) {
    // sigma_max^2 is the larger eigenvalue of h = a^H a, written as
    // midpoint + radius. The radius is a sum of squares, so nothing
    // cancels when the singular values are close (t^2 - 4 det h would).
    const double h00 = std::norm(a(0, 0)) + std::norm(a(1, 0));
    const double h11 = std::norm(a(0, 1)) + std::norm(a(1, 1));
    const Cplx h01 = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
    const double mid = 0.5 * (h00 + h11);
    const double radius = std::hypot(0.5 * (h00 - h11), std::abs(h01));
    return std::sqrt(mid + radius);
  }
  auto s = lapack::singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

bool is_positive(const Mat& a, double tol) {
  if (tol < 0.0) throw InvalidInputError("is_positive: tol must be >= 0");
  if (!a.is_square()) throw InvalidInputError("is_positive: matrix not square");
  if (!all_finite(a)) throw InvalidInputError("is_positive: non-finite entries");
  const double scale = std::max(1.0, op_norm(a));
  if (op_norm(a - adjoint(a)) > tol * scale) return false;
  auto eig = lapack::eigh(hermitian_part(a), /*want_vectors=*/false);
  return eig.w.empty() || eig.w.front() >= -tol;
}

lapack::Svd svd(const Mat& a) { return lapack::svd(a, lapack::SvdJob::full); }

}  // namespace ncsr
