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

#include "ncsr/blockvec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncsr/errors.hpp"
#include "ncsr/kernels.hpp"

namespace ncsr {

BlockVector::BlockVector(int k, std::vector<Mat> blocks)
    : k_(k), blocks_(std::move(blocks)) {
  if (k_ <= 0) throw InvalidInputError("BlockVector: k must be positive");
  for (const Mat& b : blocks_) {
    if (b.rows() != k_ || b.cols() != k_) {
      throw InvalidInputError("BlockVector: block is not k x k");
    }
  }
}

BlockVector BlockVector::zero(int k, int len) {
  if (k <= 0 || len < 0) throw InvalidInputError("BlockVector::zero: bad shape");
  return BlockVector(k, std::vector<Mat>(static_cast<std::size_t>(len), Mat(k, k)));
}

BlockVector BlockVector::basis(int k, int len, int j) {
  if (j < 0 || j >= len) throw InvalidInputError("BlockVector::basis: index out of range");
  BlockVector e = zero(k, len);
  e[j] = Mat::identity(k);
  return e;
}

namespace {

void check_same_shape(const BlockVector& a, const BlockVector& b, const char* who) {
  if (a.k() != b.k() || a.size() != b.size()) {
    throw InvalidInputError(std::string(who) + ": shape mismatch");
  }
}

}  // namespace

BlockVector& BlockVector::operator+=(const BlockVector& o) {
  check_same_shape(*this, o, "BlockVector::operator+=");
  for (int j = 0; j < size(); ++j) (*this)[j] += o[j];
  return *this;
}

BlockVector& BlockVector::operator-=(const BlockVector& o) {
  check_same_shape(*this, o, "BlockVector::operator-=");
  for (int j = 0; j < size(); ++j) (*this)[j] -= o[j];
  return *this;
}

BlockVector& BlockVector::operator*=(Cplx s) {
  for (int j = 0; j < size(); ++j) (*this)[j] *= s;
  return *this;
}

BlockVector BlockVector::operator-() const {
  BlockVector r = *this;
  return r *= Cplx(-1.0, 0.0);
}

bool BlockVector::operator==(const BlockVector& o) const {
  if (k_ != o.k_ || size() != o.size()) return false;
  for (int j = 0; j < size(); ++j) {
    if (!((*this)[j] == o[j])) return false;
  }
  return true;
}

SupportSet::SupportSet(std::vector<int> indices, int universe)
    : indices_(std::move(indices)), universe_(universe) {
  if (universe_ < 0) throw InvalidInputError("SupportSet: negative universe");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int j : indices_) {
    if (j < 0 || j >= universe_) {
      throw InvalidInputError("SupportSet: index " + std::to_string(j) +
                              " outside universe of size " + std::to_string(universe_));
    }
  }
}

SupportSet SupportSet::full(int universe) {
  std::vector<int> all(static_cast<std::size_t>(std::max(universe, 0)));
  for (int j = 0; j < universe; ++j) all[static_cast<std::size_t>(j)] = j;
  return SupportSet(std::move(all), universe);
}

SupportSet SupportSet::empty(int universe) { return SupportSet({}, universe); }

bool SupportSet::contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

SupportSet SupportSet::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(universe_ - size()));
  for (int j = 0; j < universe_; ++j) {
    if (!contains(j)) rest.push_back(j);
  }
  return SupportSet(std::move(rest), universe_);
}

Mat inner_product(const BlockVector& x, const BlockVector& y) {
  check_same_shape(x, y, "inner_product");
  const int k = x.k();
  Mat acc(k, k);
  for (int j = 0; j < x.size(); ++j) {
    kernels::zgemm_acc_abh(static_cast<std::size_t>(k), static_cast<std::size_t>(k),
                           static_cast<std::size_t>(k), x[j].data(),
                           static_cast<std::size_t>(k), y[j].data(),
                           static_cast<std::size_t>(k), acc.data(),
                           static_cast<std::size_t>(k));
  }
  return acc;
}

double norm2(const BlockVector& d) {
  Mat g = inner_product(d, d);
  // Gram blocks are positive by construction; guard tiny negative rounding.
  double top = op_norm(hermitian_part(g));
  return std::sqrt(std::max(top, 0.0));
}

double norm1(const BlockVector& d) {
  double s = 0.0;
  for (int j = 0; j < d.size(); ++j) s += op_norm(d[j]);
  return s;
}

int norm0(const BlockVector& d, double zero_tol) {
  if (zero_tol < 0.0) throw InvalidInputError("norm0: zero_tol must be nonnegative");
  int c = 0;
  for (int j = 0; j < d.size(); ++j) {
    if (op_norm(d[j]) > zero_tol) ++c;
  }
  return c;
}

BlockVector restrict_to(const BlockVector& d, const SupportSet& m) {
  if (m.universe() != d.size()) {
    throw InvalidInputError("restrict_to: support universe does not match vector length");
  }
  BlockVector r = BlockVector::zero(d.k(), d.size());
  for (int j : m.indices()) r[j] = d[j];
  return r;
}

SupportSet support(const BlockVector& d, double zero_tol) {
  if (zero_tol < 0.0) throw InvalidInputError("support: zero_tol must be nonnegative");
  std::vector<int> idx;
  for (int j = 0; j < d.size(); ++j) {
    if (op_norm(d[j]) > zero_tol) idx.push_back(j);
  }
  return SupportSet(std::move(idx), d.size());
}

}  // namespace ncsr
