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

#include <complex>
#include <cstddef>

// Low-level complex double kernels behind all dense arithmetic.  Every entry
// point has a scalar reference implementation and (on x86-64) an AVX2+FMA
// variant; the active variant is selected at runtime from CPU features and
// can be overridden for testing.  Matrices are column-major.  Input and
// output ranges must not alias.

namespace ncsr::kernels {

using Cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

/// Backend currently in use (resolved on first call; honors the
/// NCSR_BACKEND environment variable, values "scalar" or "avx2").
Backend active_backend();

/// True if `b` can run on this CPU/build.
bool backend_supported(Backend b);

/// Force a backend.  Throws InvalidInputError if unsupported.
void set_backend(Backend b);

const char* backend_name(Backend b);

/// sum_i x[i] * conj(y[i])
Cplx zdotc(std::size_t n, const Cplx* x, const Cplx* y);

/// y[i] += alpha * x[i]
void zaxpy(std::size_t n, Cplx alpha, const Cplx* x, Cplx* y);

/// sum_i |x[i]|^2
double znrm2sq(std::size_t n, const Cplx* x);

/// y = A x        (A: rows x cols, leading dimension lda)
void zgemv_n(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y);

/// y = A^H x      (y has length cols)
void zgemv_c(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y);

/// C += A B       (A: m x k, B: k x n, C: m x n)
void zgemm_acc(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
               std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
               std::size_t ldc);

/// C += A B^H     (A: m x k, B: n x k, C: m x n)
void zgemm_acc_abh(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc);

/// C += A^H B     (A: k x m, B: k x n, C: m x n)
void zgemm_acc_ahb(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc);

// Per-backend tables, used by the dispatcher and by the equivalence tests.
struct VTable {
  Cplx (*zdotc)(std::size_t, const Cplx*, const Cplx*);
  void (*zaxpy)(std::size_t, Cplx, const Cplx*, Cplx*);
  double (*znrm2sq)(std::size_t, const Cplx*);
  void (*zgemv_n)(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
  void (*zgemv_c)(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
  void (*zgemm_acc)(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                    const Cplx*, std::size_t, Cplx*, std::size_t);
  void (*zgemm_acc_abh)(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                        const Cplx*, std::size_t, Cplx*, std::size_t);
  void (*zgemm_acc_ahb)(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                        const Cplx*, std::size_t, Cplx*, std::size_t);
};

/// Table for a backend; nullptr if not built into this binary.
const VTable* backend_table(Backend b);

}  // namespace ncsr::kernels
