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

#ifndef NCSR_BLOCKVEC_HPP_
#define NCSR_BLOCKVEC_HPP_

#include <vector>

#include "ncsr/algebra.hpp"
#include "ncsr/types.hpp"

namespace ncsr {

// Element of the free module A^len over A = M_k(C), stored as len blocks of
// k x k matrices.  The same representation serves both coefficient vectors
// (length n) and module-side vectors (length m).
class BlockVector {
 public:
  BlockVector() = default;
  BlockVector(int k, std::vector<Mat> blocks);

  static BlockVector zero(int k, int len);
  // Canonical basis vector e_j: identity block at index j, zero elsewhere.
  static BlockVector basis(int k, int len, int j);

  int k() const { return k_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const Mat& operator[](int j) const { return blocks_[static_cast<std::size_t>(j)]; }
  Mat& operator[](int j) { return blocks_[static_cast<std::size_t>(j)]; }
  const std::vector<Mat>& blocks() const { return blocks_; }

  BlockVector& operator+=(const BlockVector& o);
  BlockVector& operator-=(const BlockVector& o);
  BlockVector& operator*=(Cplx s);
  friend BlockVector operator+(BlockVector a, const BlockVector& b) { return a += b; }
  friend BlockVector operator-(BlockVector a, const BlockVector& b) { return a -= b; }
  friend BlockVector operator*(Cplx s, BlockVector v) { return v *= s; }
  BlockVector operator-() const;

  bool operator==(const BlockVector& o) const;

 private:
  int k_ = 0;
  std::vector<Mat> blocks_;
};

using CoefficientVector = BlockVector;
using ModuleVector = BlockVector;

// Sorted set of 0-based block indices inside a universe {0, ..., n-1}.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::vector<int> indices, int universe);

  static SupportSet full(int universe);
  static SupportSet empty(int universe);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int j) const;
  SupportSet complement() const;

  bool operator==(const SupportSet& o) const {
    return universe_ == o.universe_ && indices_ == o.indices_;
  }

 private:
  std::vector<int> indices_;
  int universe_ = 0;
};

// <x, y> = sum_j x_j y_j^*.  The result satisfies <x,y> = adjoint(<y,x>)
// exactly (not merely up to rounding); see the blockvec tests.
Mat inner_product(const BlockVector& x, const BlockVector& y);

// Module 2-norm: || sum_j d_j d_j^* ||^{1/2} in the operator norm.
double norm2(const BlockVector& d);
// Block 1-norm: sum_j ||d_j||.
double norm1(const BlockVector& d);
// Number of blocks with operator norm above zero_tol.
int norm0(const BlockVector& d, double zero_tol = 1e-8);

// Blocks outside M are zeroed; the length is unchanged.
BlockVector restrict_to(const BlockVector& d, const SupportSet& m);

// Indices of blocks with operator norm above zero_tol.
SupportSet support(const BlockVector& d, double zero_tol = 1e-8);

}  // namespace ncsr

#endif  // NCSR_BLOCKVEC_HPP_
