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

#include <vector>

#include "ncsr/types.hpp"

// Thin wrappers over LAPACK factorizations.  Everything above this layer
// works with Mat; everything below is LAPACKE.

namespace ncsr::lapack {

struct Svd {
  Mat u;                  // left singular vectors (columns)
  std::vector<double> s;  // singular values, descending
  Mat vh;                 // conjugate-transposed right singular vectors (rows)
};

enum class SvdJob {
  values,  // singular values only; u and vh left empty
  thin,    // u: m x min(m,n), vh: min(m,n) x n
  full,    // u: m x m, vh: n x n
};

/// Complex SVD via zgesvd.  Throws NumericalError if the QR iteration does
/// not converge, InvalidInputError on non-finite entries.
Svd svd(const Mat& a, SvdJob job);

std::vector<double> singular_values(const Mat& a);

struct Eigh {
  std::vector<double> w;  // eigenvalues, ascending
  Mat v;                  // eigenvectors (columns)
};

/// Hermitian eigendecomposition via zheevd.  The input is used as-is;
/// callers symmetrize first if needed.
Eigh eigh(const Mat& a, bool want_vectors = true);

struct QrThin {
  Mat q;                    // rows(a) x cols(a), orthonormal columns
  std::vector<Cplx> rdiag;  // diagonal of R
};

/// Thin QR via zgeqrf + zungqr; requires rows >= cols.
QrThin qr_thin(const Mat& a);

}  // namespace ncsr::lapack
