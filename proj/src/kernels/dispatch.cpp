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

#include "ncsr/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "ncsr/errors.hpp"

namespace ncsr::kernels {

namespace scalar_impl {
Cplx zdotc(std::size_t, const Cplx*, const Cplx*);
void zaxpy(std::size_t, Cplx, const Cplx*, Cplx*);
double znrm2sq(std::size_t, const Cplx*);
void zgemv_n(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
void zgemv_c(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
void zgemm_acc(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
               const Cplx*, std::size_t, Cplx*, std::size_t);
void zgemm_acc_abh(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                   const Cplx*, std::size_t, Cplx*, std::size_t);
void zgemm_acc_ahb(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                   const Cplx*, std::size_t, Cplx*, std::size_t);
}  // namespace scalar_impl

#ifdef NCSR_HAVE_AVX2
namespace avx2_impl {
Cplx zdotc(std::size_t, const Cplx*, const Cplx*);
void zaxpy(std::size_t, Cplx, const Cplx*, Cplx*);
double znrm2sq(std::size_t, const Cplx*);
void zgemv_n(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
void zgemv_c(std::size_t, std::size_t, const Cplx*, std::size_t, const Cplx*, Cplx*);
void zgemm_acc(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
               const Cplx*, std::size_t, Cplx*, std::size_t);
void zgemm_acc_abh(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                   const Cplx*, std::size_t, Cplx*, std::size_t);
void zgemm_acc_ahb(std::size_t, std::size_t, std::size_t, const Cplx*, std::size_t,
                   const Cplx*, std::size_t, Cplx*, std::size_t);
}  // namespace avx2_impl
#endif

namespace {

const VTable kScalarTable = {
    scalar_impl::zdotc,     scalar_impl::zaxpy,         scalar_impl::znrm2sq,
    scalar_impl::zgemv_n,   scalar_impl::zgemv_c,       scalar_impl::zgemm_acc,
    scalar_impl::zgemm_acc_abh, scalar_impl::zgemm_acc_ahb};

#ifdef NCSR_HAVE_AVX2
const VTable kAvx2Table = {
    avx2_impl::zdotc,     avx2_impl::zaxpy,         avx2_impl::znrm2sq,
    avx2_impl::zgemv_n,   avx2_impl::zgemv_c,       avx2_impl::zgemm_acc,
    avx2_impl::zgemm_acc_abh, avx2_impl::zgemm_acc_ahb};
#endif

bool cpu_has_avx2_fma() {
#if defined(NCSR_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct DispatchState {
  std::atomic<const VTable*> table;
  std::atomic<Backend> backend;

  DispatchState() {
    Backend b = cpu_has_avx2_fma() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("NCSR_BACKEND")) {
      if (std::strcmp(env, "scalar") == 0) b = Backend::scalar;
      if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2_fma()) b = Backend::avx2;
    }
    backend.store(b);
    table.store(backend_table(b));
  }
};

DispatchState& state() {
  static DispatchState s;
  return s;
}

inline const VTable& active() { return *state().table.load(std::memory_order_acquire); }

}  // namespace

const VTable* backend_table(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kScalarTable;
    case Backend::avx2:
#ifdef NCSR_HAVE_AVX2
      return cpu_has_avx2_fma() ? &kAvx2Table : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend active_backend() { return state().backend.load(); }

bool backend_supported(Backend b) { return backend_table(b) != nullptr; }

void set_backend(Backend b) {
  const VTable* t = backend_table(b);
  if (t == nullptr) {
    throw InvalidInputError(std::string("kernel backend not supported here: ") +
                            backend_name(b));
  }
  state().backend.store(b);
  state().table.store(t, std::memory_order_release);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

Cplx zdotc(std::size_t n, const Cplx* x, const Cplx* y) { return active().zdotc(n, x, y); }

void zaxpy(std::size_t n, Cplx alpha, const Cplx* x, Cplx* y) {
  active().zaxpy(n, alpha, x, y);
}

double znrm2sq(std::size_t n, const Cplx* x) { return active().znrm2sq(n, x); }

void zgemv_n(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y) {
  active().zgemv_n(rows, cols, a, lda, x, y);
}

void zgemv_c(std::size_t rows, std::size_t cols, const Cplx* a, std::size_t lda,
             const Cplx* x, Cplx* y) {
  active().zgemv_c(rows, cols, a, lda, x, y);
}

void zgemm_acc(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
               std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
               std::size_t ldc) {
  active().zgemm_acc(m, k, n, a, lda, b, ldb, c, ldc);
}

void zgemm_acc_abh(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc) {
  active().zgemm_acc_abh(m, k, n, a, lda, b, ldb, c, ldc);
}

void zgemm_acc_ahb(std::size_t m, std::size_t k, std::size_t n, const Cplx* a,
                   std::size_t lda, const Cplx* b, std::size_t ldb, Cplx* c,
                   std::size_t ldc) {
  active().zgemm_acc_ahb(m, k, n, a, lda, b, ldb, c, ldc);
}

}  // namespace ncsr::kernels
