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

#ifndef NCSR_FRAME_HPP_
#define NCSR_FRAME_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "ncsr/blockvec.hpp"
#include "ncsr/types.hpp"

namespace ncsr {

// Finite system {tau_1, ..., tau_n} in A^m with A = M_k(C).  Derived
// quantities (Gram matrix, coherence, frame bounds) are computed once on
// demand and shared across copies.
class ModularFrame {
 public:
  ModularFrame(int k, int m, std::vector<ModuleVector> vectors);

  int k() const { return k_; }
  int m() const { return m_; }
  int n() const { return static_cast<int>(vectors_.size()); }
  const ModuleVector& vec(int j) const { return vectors_[static_cast<std::size_t>(j)]; }
  const std::vector<ModuleVector>& vectors() const { return vectors_; }

 private:
  friend const Mat& gram(const ModularFrame&);
  friend double coherence(const ModularFrame&);
  friend std::pair<double, double> frame_bounds(const ModularFrame&, double);

  struct Cache;
  int k_ = 0;
  int m_ = 0;
  std::vector<ModuleVector> vectors_;
  std::shared_ptr<Cache> cache_;
};

struct UnitValidation {
  bool ok = false;
  double tol = 0.0;
  double max_defect = 0.0;
  std::vector<double> defects;  // ||<tau_j, tau_j> - I|| per index
};

UnitValidation validate_unit_inner_product(const ModularFrame& f, double unit_tol = 1e-8);

// Full nk x nk Gram matrix; block (j, l) is <tau_j, tau_l>.  The returned
// matrix is Hermitian exactly: the lower triangle mirrors the upper.
const Mat& gram(const ModularFrame& f);
Mat gram_block(const ModularFrame& f, int j, int l);

// mu = max over j != l of ||<tau_j, tau_l>||.  Requires n >= 2 and a unit
// system (validated at tolerance 1e-8).
double coherence(const ModularFrame& f);

// (1 + 1/mu) / 2; +infinity when mu <= 1e-8.
double sparsity_bound(const ModularFrame& f);

// Optimal (A, B) with A <x,x> <= sum_j <x,tau_j><x,tau_j>* <= B <x,x>.
// Throws NotAFrameError when A <= tol.
std::pair<double, double> frame_bounds(const ModularFrame& f, double tol = 1e-10);

// x_i = sum_j d_j tau_{j,i}
ModuleVector synthesis(const ModularFrame& f, const CoefficientVector& d);
// c_j = <x, tau_j>
CoefficientVector analysis(const ModularFrame& f, const ModuleVector& x);

// n unit vectors drawn independently: each tau_j is the first k rows of a
// Haar unitary of order mk, reshaped into m blocks.  Requires n >= m so the
// system spans almost surely.
ModularFrame random_unit_frame(int k, int m, int n, std::uint64_t seed);

}  // namespace ncsr

#endif  // NCSR_FRAME_HPP_
