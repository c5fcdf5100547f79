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

// Scalar reference kernels.  Sequential accumulation order; the SIMD
// variants are tested for equivalence against these.

#include "ncsr/kernels.hpp"

namespace ncsr::kernels::scalar_impl {

Cplx zdotc(std::size_t n, const Cplx* x, const Cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].imag() * y[i].real() - x[i].real() * y[i].imag();
  }
  return {re, im};
}

void zaxpy(std::size_t n, Cplx alpha, const Cplx* x, Cplx* y) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double znrm2sq(std::size_t n, const Cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void zgemv_n(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = Cplx(0.0, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    zaxpy(rows, x[j], a + j * lda, y);
  }
}

void zgemv_c(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y) {
  for (std::size_t j = 0; j < cols; ++j) {
    // (A^H x)_j = conj(sum_i a(i,j) conj(x_i))
    y[j] = std::conj(zdotc(rows, a + j * lda, x));
  }
}

void zgemm_acc(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
               std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
               std::size_t ldc) {
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      zaxpy(m, b[l + j * ldb], a + l * lda, c + j * ldc);
    }
  }
}

void zgemm_acc_abh(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc) {
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      zaxpy(m, std::conj(b[j + l * ldb]), a + l * lda, c + j * ldc);
    }
  }
}

void zgemm_acc_ahb(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc) {
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      c[i + j * ldc] += std::conj(zdotc(k, a + i * lda, b + j * ldb));
    }
  }
}

}  // namespace ncsr::kernels::scalar_impl
