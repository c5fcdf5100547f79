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

#ifndef NCSR_SOLVERS_HPP_
#define NCSR_SOLVERS_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ncsr/blockvec.hpp"
#include "ncsr/frame.hpp"
#include "ncsr/lapack.hpp"
#include "ncsr/types.hpp"

namespace ncsr {

// Column-stacked linearization of the synthesis map: an (m k^2) x (n k^2)
// matrix applied to the flattening of d reproduces the flattening of
// synthesis(F, d).  Block (i, j) is transpose(tau_{j,i}) (x) I_k.
struct FlattenedSystem {
  int k = 0;
  int m = 0;
  int n = 0;
  Mat a;
  std::vector<Cplx> rhs;
  std::string convention = "column-stacking";

  // Thin SVD of `a`, computed once on first use.
  const lapack::Svd& factors() const;

 private:
  struct Lazy {
    std::once_flag once;
    lapack::Svd svd;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

// Column-stacking of the blocks, block j at offset j*k^2.
std::vector<Cplx> flatten_vec(const BlockVector& v);
BlockVector unflatten_vec(int k, int len, const std::vector<Cplx>& data);

Mat flatten_matrix(const ModularFrame& f);
FlattenedSystem flatten(const ModularFrame& f, const ModuleVector& x);

struct LeastSquaresFit {
  CoefficientVector solution;  // full length, zero off the support
  double residual = 0.0;       // module 2-norm of synthesis(F, c) - x
  bool full_column_rank = false;
};

LeastSquaresFit least_squares_on_support(const ModularFrame& f, const ModuleVector& x,
                                         const SupportSet& m, double rank_tol = 1e-10);

enum class SolverStatus { converged, max_iters, infeasible };
std::string to_string(SolverStatus s);

struct SolverReport {
  CoefficientVector solution;
  double objective = 0.0;
  double feasibility_residual = 0.0;
  long iterations = 0;
  SolverStatus status = SolverStatus::converged;
  // Present for the l0 oracle only.
  std::optional<int> min_cardinality;
  std::vector<SupportSet> supports;
  std::optional<bool> unique;
};

struct L0Options {
  double zero_tol = 1e-8;
  double feas_tol = 1e-8;
  int max_card = -1;  // -1 means n
};

// Exhaustive minimum-cardinality solve: supports enumerated by increasing
// cardinality, lexicographic within each cardinality.
SolverReport l0_oracle(const ModularFrame& f, const ModuleVector& x,
                       const L0Options& opts = {});

// argmin_z 0.5 ||z - a||_F^2 + lambda ||z||, via Moreau decomposition
// against the nuclear-norm ball.
Mat prox_spectral(const Mat& a, double lambda);

struct BpParams {
  double rho = 1.0;
  long max_iters = 20000;
  double eps_abs = 1e-9;
  double eps_rel = 1e-9;
  double feas_tol = 1e-8;
  double zero_tol = 1e-8;
  bool debias = true;
};

// Block basis pursuit min ||d||_1 s.t. synthesis(F, d) = x by operator
// splitting: exact affine projection (pseudoinverse) against blockwise
// prox_spectral, with scaled dual and residual balancing.
SolverReport bp_admm(const ModularFrame& f, const ModuleVector& x,
                     const BpParams& params = {});

}  // namespace ncsr

#endif  // NCSR_SOLVERS_HPP_
