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

#include "ncsr/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "ncsr/algebra.hpp"
#include "ncsr/errors.hpp"
#include "ncsr/kernels.hpp"

namespace ncsr {

const lapack::Svd& FlattenedSystem::factors() const {
  std::call_once(lazy_->once, [&] { lazy_->svd = lapack::svd(a, lapack::SvdJob::thin); });
  return lazy_->svd;
}

std::vector<Cplx> flatten_vec(const BlockVector& v) {
  const std::size_t kk = static_cast<std::size_t>(v.k()) * static_cast<std::size_t>(v.k());
  std::vector<Cplx> out(kk * static_cast<std::size_t>(v.size()));
  for (int j = 0; j < v.size(); ++j) {
    std::memcpy(out.data() + static_cast<std::size_t>(j) * kk, v[j].data(),
                kk * sizeof(Cplx));
  }
  return out;
}

BlockVector unflatten_vec(int k, int len, const std::vector<Cplx>& data) {
  const std::size_t kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  if (data.size() != kk * static_cast<std::size_t>(len)) {
    throw InvalidInputError("unflatten_vec: length mismatch");
  }
  BlockVector v = BlockVector::zero(k, len);
  for (int j = 0; j < len; ++j) {
    std::memcpy(v[j].data(), data.data() + static_cast<std::size_t>(j) * kk,
                kk * sizeof(Cplx));
  }
  return v;
}

Mat flatten_matrix(const ModularFrame& f) {
  const int k = f.k(), m = f.m(), n = f.n();
  const int kk = k * k;
  Mat a(m * kk, n * kk);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const Mat& t = f.vec(j)[i];
      for (int c2 = 0; c2 < k; ++c2) {
        for (int c1 = 0; c1 < k; ++c1) {
          const Cplx v = t(c1, c2);
          for (int r = 0; r < k; ++r) {
            a(i * kk + c2 * k + r, j * kk + c1 * k + r) = v;
          }
        }
      }
    }
  }
  return a;
}

FlattenedSystem flatten(const ModularFrame& f, const ModuleVector& x) {
  if (x.k() != f.k() || x.size() != f.m()) {
    throw InvalidInputError("flatten: module vector shape does not match frame");
  }
  FlattenedSystem sys;
  sys.k = f.k();
  sys.m = f.m();
  sys.n = f.n();
  sys.a = flatten_matrix(f);
  sys.rhs = flatten_vec(x);
  return sys;
}

namespace {

int truncated_rank(const std::vector<double>& s, double rel_tol) {
  if (s.empty()) return 0;
  const double cut = rel_tol * s.front();
  int r = 0;
  for (double v : s) {
    if (v > cut && v > 0.0) ++r;
  }
  return r;
}

// Minimum-norm least squares through an SVD, zeroing directions at or below
// rel_tol * sigma_max.
std::vector<Cplx> pinv_apply(const lapack::Svd& f, int rank, const std::vector<Cplx>& b) {
  const int r = static_cast<int>(f.s.size());
  const int rows = f.u.rows();
  const int cols = f.vh.cols();
  std::vector<Cplx> t(static_cast<std::size_t>(r));
  if (r > 0) {
    kernels::zgemv_c(static_cast<std::size_t>(rows), static_cast<std::size_t>(r),
                     f.u.data(), static_cast<std::size_t>(rows), b.data(), t.data());
  }
  for (int i = 0; i < r; ++i) {
    t[static_cast<std::size_t>(i)] =
        (i < rank) ? t[static_cast<std::size_t>(i)] / f.s[static_cast<std::size_t>(i)]
                   : Cplx(0.0, 0.0);
  }
  std::vector<Cplx> out(static_cast<std::size_t>(cols));
  if (r > 0) {
    kernels::zgemv_c(static_cast<std::size_t>(r), static_cast<std::size_t>(cols),
                     f.vh.data(), static_cast<std::size_t>(r), t.data(), out.data());
  }
  return out;
}

}  // namespace

LeastSquaresFit least_squares_on_support(const ModularFrame& f, const ModuleVector& x,
                                         const SupportSet& m, double rank_tol) {
  if (m.universe() != f.n()) {
    throw InvalidInputError("least_squares_on_support: support universe mismatch");
  }
  if (x.k() != f.k() || x.size() != f.m()) {
    throw InvalidInputError("least_squares_on_support: module vector shape mismatch");
  }
  if (rank_tol < 0.0) throw InvalidInputError("least_squares_on_support: negative tolerance");

  LeastSquaresFit fit;
  fit.solution = BlockVector::zero(f.k(), f.n());
  if (m.size() == 0) {
    fit.residual = norm2(x);
    fit.full_column_rank = true;
    return fit;
  }

  const int kk = f.k() * f.k();
  const Mat a = flatten_matrix(f);
  Mat am(a.rows(), m.size() * kk);
  for (int c = 0; c < m.size(); ++c) {
    const int j = m.indices()[static_cast<std::size_t>(c)];
    std::memcpy(am.data() + static_cast<std::size_t>(c) * kk * a.rows(),
                a.data() + static_cast<std::size_t>(j) * kk * a.rows(),
                static_cast<std::size_t>(kk) * static_cast<std::size_t>(a.rows()) * sizeof(Cplx));
  }

  const lapack::Svd svd = lapack::svd(am, lapack::SvdJob::thin);
  const int rank = truncated_rank(svd.s, rank_tol);
  fit.full_column_rank = (rank == am.cols());

  const std::vector<Cplx> b = flatten_vec(x);
  const std::vector<Cplx> cm = pinv_apply(svd, rank, b);
  for (int c = 0; c < m.size(); ++c) {
    const int j = m.indices()[static_cast<std::size_t>(c)];
    std::memcpy(fit.solution[j].data(), cm.data() + static_cast<std::size_t>(c) * kk,
                static_cast<std::size_t>(kk) * sizeof(Cplx));
  }
  fit.residual = norm2(synthesis(f, fit.solution) - x);
  return fit;
}

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::converged: return "converged";
    case SolverStatus::max_iters: return "max_iters";
    case SolverStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

// Advances `idx` to the next cardinality-c subset of {0,...,n-1} in
// lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
  const int c = static_cast<int>(idx.size());
  for (int i = c - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - (c - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int l = i + 1; l < c; ++l) {
        idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

SolverReport l0_oracle(const ModularFrame& f, const ModuleVector& x, const L0Options& opts) {
  if (x.k() != f.k() || x.size() != f.m()) {
    throw InvalidInputError("l0_oracle: module vector shape mismatch");
  }
  if (opts.zero_tol < 0.0 || opts.feas_tol < 0.0) {
    throw InvalidInputError("l0_oracle: negative tolerance");
  }
  const int n = f.n();
  const int max_card = (opts.max_card < 0) ? n : opts.max_card;
  if (max_card > n) throw InvalidInputError("l0_oracle: max_card exceeds n");

  SolverReport rep;
  rep.solution = BlockVector::zero(f.k(), n);
  long examined = 0;

  for (int card = 0; card <= max_card; ++card) {
    std::vector<SupportSet> fits;
    std::optional<LeastSquaresFit> first_fit;

    std::vector<int> idx(static_cast<std::size_t>(card));
    std::iota(idx.begin(), idx.end(), 0);
    bool more = true;
    while (more) {
      SupportSet m(idx, n);
      ++examined;
      LeastSquaresFit fit = least_squares_on_support(f, x, m);
      if (fit.residual <= opts.feas_tol) {
        if (!first_fit) first_fit = std::move(fit);
        fits.push_back(std::move(m));
      }
      more = (card > 0) && next_combination(idx, n);
    }

    if (!fits.empty()) {
      rep.min_cardinality = card;
      rep.supports = fits;
      rep.solution = first_fit->solution;
      rep.feasibility_residual = first_fit->residual;
      rep.objective = static_cast<double>(norm0(rep.solution, opts.zero_tol));
      rep.iterations = examined;
      rep.status = SolverStatus::converged;
      rep.unique = (fits.size() == 1) && first_fit->full_column_rank;
      return rep;
    }
  }

  rep.status = SolverStatus::infeasible;
  rep.feasibility_residual = norm2(x);
  rep.objective = 0.0;
  rep.iterations = examined;
  return rep;
}

Mat prox_spectral(const Mat& a, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInputError("prox_spectral: lambda must be positive");
  if (a.rows() != a.cols()) throw InvalidInputError("prox_spectral: matrix must be square");
  const int k = a.rows();
  if (k == 1) {
    const double mag = std::abs(a(0, 0));
    Mat z(1, 1);
    if (mag > lambda) z(0, 0) = a(0, 0) * ((mag - lambda) / mag);
    return z;
  }

  const lapack::Svd f = lapack::svd(a, lapack::SvdJob::thin);
  const double nuclear = std::accumulate(f.s.begin(), f.s.end(), 0.0);
  if (nuclear <= lambda) return Mat(k, k);

  // Project the (descending) singular values onto the l1-ball of radius
  // lambda; the prox clips the spectrum at the resulting threshold.
  double theta = 0.0;
  double prefix = 0.0;
  for (int i = 0; i < k; ++i) {
    prefix += f.s[static_cast<std::size_t>(i)];
    const double cand = (prefix - lambda) / static_cast<double>(i + 1);
    if (f.s[static_cast<std::size_t>(i)] > cand) theta = cand;
  }

  Mat us = f.u;
  for (int j = 0; j < k; ++j) {
    const double clipped = std::min(f.s[static_cast<std::size_t>(j)], theta);
    for (int i = 0; i < k; ++i) us(i, j) *= clipped;
  }
  return us * f.vh;
}

namespace {

double vec_norm(const std::vector<Cplx>& v) {
  return std::sqrt(kernels::znrm2sq(v.size(), v.data()));
}

}  // namespace

SolverReport bp_admm(const ModularFrame& f, const ModuleVector& x, const BpParams& params) {
  if (x.k() != f.k() || x.size() != f.m()) {
    throw InvalidInputError("bp_admm: module vector shape mismatch");
  }
  if (params.rho <= 0.0 || params.max_iters < 1 || params.eps_abs < 0.0 ||
      params.eps_rel < 0.0 || params.feas_tol < 0.0 || params.zero_tol < 0.0) {
    throw InvalidInputError("bp_admm: invalid parameters");
  }
  frame_bounds(f);  // throws NotAFrameError unless synthesis is surjective

  const int k = f.k(), n = f.n();
  const std::size_t kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  const std::size_t nn = kk * static_cast<std::size_t>(n);

  SolverReport rep;
  rep.solution = BlockVector::zero(k, n);
  if (norm2(x) == 0.0) {
    rep.status = SolverStatus::converged;
    return rep;
  }

  const FlattenedSystem sys = flatten(f, x);
  const lapack::Svd& svd = sys.factors();
  const int rank = truncated_rank(svd.s, 1e-12);
  const int r = static_cast<int>(svd.s.size());

  // Affine projection P(v) = v - V V^H v + p0 with p0 the min-norm solution.
  const std::vector<Cplx> p0 = pinv_apply(svd, rank, sys.rhs);
  std::vector<Cplx> t(static_cast<std::size_t>(r));
  auto project = [&](const std::vector<Cplx>& v, std::vector<Cplx>& out) {
    kernels::zgemv_n(static_cast<std::size_t>(r), nn, svd.vh.data(),
                     static_cast<std::size_t>(r), v.data(), t.data());
    for (int i = rank; i < r; ++i) t[static_cast<std::size_t>(i)] = Cplx(0.0, 0.0);
    kernels::zgemv_c(static_cast<std::size_t>(r), nn, svd.vh.data(),
                     static_cast<std::size_t>(r), t.data(), out.data());
    for (std::size_t i = 0; i < nn; ++i) out[i] = v[i] - out[i] + p0[i];
  };

  std::vector<Cplx> d(nn), z(nn), u(nn), zprev(nn), work(nn);
  double rho = params.rho;
  bool admm_converged = false;
  long iters = 0;
  Mat ablk(k, k);

  for (long it = 1; it <= params.max_iters; ++it) {
    iters = it;
    for (std::size_t i = 0; i < nn; ++i) work[i] = z[i] - u[i];
    project(work, d);

    zprev = z;
    for (int j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < kk; ++i) {
        ablk.data()[i] = d[static_cast<std::size_t>(j) * kk + i] +
                         u[static_cast<std::size_t>(j) * kk + i];
      }
      const Mat zblk = prox_spectral(ablk, 1.0 / rho);
      std::memcpy(z.data() + static_cast<std::size_t>(j) * kk, zblk.data(),
                  kk * sizeof(Cplx));
    }

    for (std::size_t i = 0; i < nn; ++i) u[i] += d[i] - z[i];

    double rnorm2 = 0.0, snorm2 = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
      rnorm2 += std::norm(d[i] - z[i]);
      snorm2 += std::norm(z[i] - zprev[i]);
    }
    const double rnorm = std::sqrt(rnorm2);
    const double snorm = rho * std::sqrt(snorm2);
    const double sqn = std::sqrt(static_cast<double>(nn));
    const double eps_pri =
        sqn * params.eps_abs + params.eps_rel * std::max(vec_norm(d), vec_norm(z));
    const double eps_dual = sqn * params.eps_abs + params.eps_rel * rho * vec_norm(u);
    if (rnorm <= eps_pri && snorm <= eps_dual) {
      admm_converged = true;
      break;
    }

    if (rnorm > 10.0 * snorm) {
      rho *= 2.0;
      for (std::size_t i = 0; i < nn; ++i) u[i] *= 0.5;
    } else if (snorm > 10.0 * rnorm) {
      rho *= 0.5;
      for (std::size_t i = 0; i < nn; ++i) u[i] *= 2.0;
    }
  }

  CoefficientVector cand = unflatten_vec(k, n, d);
  if (params.debias) {
    const SupportSet supp = support(cand, params.zero_tol);
    const LeastSquaresFit fit = least_squares_on_support(f, x, supp);
    if (fit.residual <= params.feas_tol &&
        norm1(fit.solution) <= norm1(cand) + 1e-9) {
      cand = fit.solution;
    }
  }

  rep.solution = cand;
  rep.objective = norm1(cand);
  rep.feasibility_residual = norm2(synthesis(f, cand) - x);
  rep.iterations = iters;
  if (!admm_converged) {
    rep.status = SolverStatus::max_iters;
  } else if (rep.feasibility_residual <= params.feas_tol) {
    rep.status = SolverStatus::converged;
  } else {
    rep.status = SolverStatus::infeasible;
  }
  return rep;
}

}  // namespace ncsr
