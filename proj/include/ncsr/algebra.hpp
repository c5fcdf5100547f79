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

#pragma once

#include "ncsr/lapack.hpp"
#include "ncsr/types.hpp"

// The concrete C*-algebra: k x k complex matrices with conjugate-transpose
// involution and the operator norm.  An AlgebraElement is a square Mat of
// order k; k is a runtime parameter shared by all elements of one instance.

namespace ncsr {

using AlgebraElement = Mat;

/// Default tolerance for positivity and zero tests (relative).
inline constexpr double kDefaultTol = 1e-10;

/// Largest singular value.  Zero iff the element is zero.
/// Closed forms for orders 1 and 2, zgesvd above.
double op_norm(const Mat& a);

/// True iff a is (numerically) self-adjoint and its Hermitian part has no
/// eigenvalue below -tol.  Hermitian defect is measured against
/// tol * max(1, ||a||).
bool is_positive(const Mat& a, double tol = kDefaultTol);

/// Full SVD with descending singular values.  The factors reconstruct the
/// input to ~1e-10 * max(1, ||a||); convergence failures raise
/// NumericalError.
lapack::Svd svd(const Mat& a);

}  // namespace ncsr
