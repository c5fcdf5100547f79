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

#include "ncsr/types.hpp"

#include <cmath>

#include "ncsr/errors.hpp"
#include "ncsr/kernels.hpp"

namespace ncsr {

namespace {
void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInputError(std::string("shape mismatch in ") + op);
  }
}
}  // namespace

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "matrix addition");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "matrix subtraction");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}

Mat& Mat::operator*=(Cplx s) {
  for (auto& v : d_) v *= s;
  return *this;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& v : r.d_) v = -v;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InvalidInputError("shape mismatch in matrix product");
  Mat c(rows_, o.cols_);
  kernels::zgemm_acc(rows_, cols_, o.cols_, data(), rows_, o.data(), o.rows_,
                     c.data(), c.rows());
  return c;
}

Mat adjoint(const Mat& a) {
  Mat r(a.cols(), a.rows());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      r(j, i) = std::conj(a(i, j));
    }
  }
  return r;
}

Mat hermitian_part(const Mat& a) {
  if (!a.is_square()) throw InvalidInputError("hermitian_part: matrix not square");
  Mat r = adjoint(a);
  r += a;
  r *= Cplx(0.5, 0.0);
  return r;
}

double frobenius_norm(const Mat& a) {
  return std::sqrt(kernels::znrm2sq(a.size(), a.data()));
}

bool all_finite(const Mat& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Cplx v = a.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Mat mul_abh(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw InvalidInputError("shape mismatch in A*B^H");
  Mat c(a.rows(), b.rows());
  kernels::zgemm_acc_abh(a.rows(), a.cols(), b.rows(), a.data(), a.rows(),
                         b.data(), b.rows(), c.data(), c.rows());
  return c;
}

Mat mul_ahb(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InvalidInputError("shape mismatch in A^H*B");
  Mat c(a.cols(), b.cols());
  kernels::zgemm_acc_ahb(a.cols(), a.rows(), b.cols(), a.data(), a.rows(),
                         b.data(), b.rows(), c.data(), c.rows());
  return c;
}

}  // namespace ncsr
