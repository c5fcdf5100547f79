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

#include "ncsr/lapack.hpp"

#include <algorithm>
#include <string>

#include <lapacke.h>

#include "ncsr/errors.hpp"

namespace ncsr::lapack {

namespace {

lapack_complex_double* lp(Cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void require_finite(const Mat& a, const char* op) {
  if (!all_finite(a)) {
    throw InvalidInputError(std::string(op) + ": non-finite entries");
  }
}

}  // namespace

Svd svd(const Mat& a, SvdJob job) {
  require_finite(a, "svd");
  const int m = a.rows(), n = a.cols();
  const int mn = std::min(m, n);
  Mat work = a;  // zgesvd destroys its input
  Svd out;
  out.s.assign(std::size_t(std::max(mn, 1)), 0.0);
  if (m == 0 || n == 0) return out;

  char jobu = 'N', jobvt = 'N';
  int ldu = 1, ldvt = 1;
  if (job == SvdJob::thin) {
    jobu = 'S'; jobvt = 'S';
    out.u = Mat(m, mn); ldu = m;
    out.vh = Mat(mn, n); ldvt = mn;
  } else if (job == SvdJob::full) {
    jobu = 'A'; jobvt = 'A';
    out.u = Mat(m, m); ldu = m;
    out.vh = Mat(n, n); ldvt = n;
  }
  std::vector<double> superb(std::size_t(std::max(mn - 1, 1)));
  Cplx dummy;
  Cplx* uptr = (jobu == 'N') ? &dummy : out.u.data();
  Cplx* vtptr = (jobvt == 'N') ? &dummy : out.vh.data();
  int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, jobu, jobvt, m, n, lp(work.data()),
                            m, out.s.data(), lp(uptr), ldu, lp(vtptr), ldvt,
                            superb.data());
  if (info != 0) {
    throw NumericalError("zgesvd failed to converge, info=" + std::to_string(info) +
                         " for a " + std::to_string(m) + "x" + std::to_string(n) +
                         " matrix");
  }
  out.s.resize(mn);
  return out;
}

std::vector<double> singular_values(const Mat& a) { return svd(a, SvdJob::values).s; }

Eigh eigh(const Mat& a, bool want_vectors) {
  require_finite(a, "eigh");
  if (!a.is_square()) throw InvalidInputError("eigh: matrix not square");
  const int n = a.rows();
  Eigh out;
  out.w.assign(std::size_t(std::max(n, 1)), 0.0);
  if (n == 0) return out;
  Mat work = a;
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'U', n,
                            lp(work.data()), n, out.w.data());
  if (info != 0) {
    throw NumericalError("zheevd failed, info=" + std::to_string(info));
  }
  out.w.resize(n);
  if (want_vectors) out.v = work;
  return out;
}

QrThin qr_thin(const Mat& a) {
  require_finite(a, "qr");
  const int m = a.rows(), n = a.cols();
  if (m < n) throw InvalidInputError("qr_thin: requires rows >= cols");
  Mat work = a;
  std::vector<Cplx> tau(std::size_t(std::max(n, 1)));
  int info = LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, n, lp(work.data()), m, lp(tau.data()));
  if (info != 0) throw NumericalError("zgeqrf failed, info=" + std::to_string(info));
  QrThin out;
  out.rdiag.resize(n);
  for (int j = 0; j < n; ++j) out.rdiag[j] = work(j, j);
  info = LAPACKE_zungqr(LAPACK_COL_MAJOR, m, n, n, lp(work.data()), m, lp(tau.data()));
  if (info != 0) throw NumericalError("zungqr failed, info=" + std::to_string(info));
  out.q = work;
  return out;
}

}  // namespace ncsr::lapack
