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

// AVX2+FMA kernel variants.  This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the runtime dispatcher.
// Complex doubles are processed two per 256-bit register, interleaved
// [re0 im0 re1 im1].

#include "ncsr/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace ncsr::kernels::avx2_impl {

namespace {

// [a b c d] -> [b a d c]: swaps re/im inside each complex slot.
inline __m256d swap_reim(__m256d v) { return _mm256_permute_pd(v, 0x5); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

// mul + addsub rather than fmaddsub: keeps the per-slot rounding identical
// to the scalar kernel, so axpy-family results are bitwise backend-independent.
void zaxpy(std::size_t n, Cplx alpha, const Cplx* x, Cplx* y) {
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x0 = _mm256_loadu_pd(xd + 2 * i);
    __m256d x1 = _mm256_loadu_pd(xd + 2 * i + 4);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    __m256d p0 = _mm256_addsub_pd(_mm256_mul_pd(are, x0),
                                  _mm256_mul_pd(aim, swap_reim(x0)));
    __m256d p1 = _mm256_addsub_pd(_mm256_mul_pd(are, x1),
                                  _mm256_mul_pd(aim, swap_reim(x1)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), p0));
    _mm256_storeu_pd(yd + 2 * i + 4, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i + 4), p1));
  }
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d p = _mm256_addsub_pd(_mm256_mul_pd(are, xv),
                                 _mm256_mul_pd(aim, swap_reim(xv)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), p));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(alpha.real() * xr - alpha.imag() * xi,
                 alpha.real() * xi + alpha.imag() * xr);
  }
}

Cplx zdotc(std::size_t n, const Cplx* x, const Cplx* y) {
  // accA lanes hold xr*yr (even) and xi*yi (odd): re = even + odd.
  // accB lanes hold xi*yr (even) and xr*yi (odd): im = even - odd.
  __m256d accA = _mm256_setzero_pd();
  __m256d accB = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    accA = _mm256_fmadd_pd(xv, yv, accA);
    accB = _mm256_fmadd_pd(swap_reim(xv), yv, accB);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, accA);
  _mm256_store_pd(b, accB);
  double re = (a[0] + a[2]) + (a[1] + a[3]);
  double im = (b[0] + b[2]) - (b[1] + b[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].imag() * y[i].real() - x[i].real() * y[i].imag();
  }
  return {re, im};
}

double znrm2sq(std::size_t n, const Cplx* x) {
  __m256d acc = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
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

}  // namespace ncsr::kernels::avx2_impl

#endif  // __x86_64__ && __AVX2__ && __FMA__
