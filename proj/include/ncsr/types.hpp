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
#include <vector>

namespace ncsr {

using Cplx = std::complex<double>;

/// Dense column-major complex matrix.  Value type: all operations produce
/// new matrices, nothing here mutates shared state.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(std::size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return d_.size(); }

  Cplx* data() { return d_.data(); }
  const Cplx* data() const { return d_.data(); }

  Cplx& operator()(int i, int j) { return d_[std::size_t(j) * rows_ + i]; }
  Cplx operator()(int i, int j) const { return d_[std::size_t(j) * rows_ + i]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(Cplx s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Cplx s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, Cplx s) { return a *= s; }
  Mat operator*(const Mat& o) const;  // matrix product
  Mat operator-() const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cplx> d_;
};

/// Conjugate transpose.
Mat adjoint(const Mat& a);

/// (a + a^H)/2; requires square.
Mat hermitian_part(const Mat& a);

double frobenius_norm(const Mat& a);

bool all_finite(const Mat& a);

/// A B^H
Mat mul_abh(const Mat& a, const Mat& b);

/// A^H B
Mat mul_ahb(const Mat& a, const Mat& b);

}  // namespace ncsr
