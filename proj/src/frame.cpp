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

#include "ncsr/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ncsr/algebra.hpp"
#include "ncsr/errors.hpp"
#include "ncsr/kernels.hpp"
#include "ncsr/lapack.hpp"
#include "ncsr/rng.hpp"

namespace ncsr {

struct ModularFrame::Cache {
  std::once_flag gram_once;
  std::once_flag coherence_once;
  std::once_flag bounds_once;
  Mat gram;
  double coherence = 0.0;
  std::pair<double, double> bounds{0.0, 0.0};
};

ModularFrame::ModularFrame(int k, int m, std::vector<ModuleVector> vectors)
    : k_(k), m_(m), vectors_(std::move(vectors)), cache_(std::make_shared<Cache>()) {
  if (k_ <= 0 || m_ <= 0) throw InvalidInputError("ModularFrame: k and m must be positive");
  if (vectors_.empty()) throw InvalidInputError("ModularFrame: need at least one vector");
  for (const ModuleVector& v : vectors_) {
    if (v.k() != k_ || v.size() != m_) {
      throw InvalidInputError("ModularFrame: vector shape mismatch");
    }
    for (int i = 0; i < m_; ++i) {
      if (!all_finite(v[i])) throw InvalidInputError("ModularFrame: non-finite entry");
    }
  }
}

UnitValidation validate_unit_inner_product(const ModularFrame& f, double unit_tol) {
  if (unit_tol < 0.0) throw InvalidInputError("validate_unit_inner_product: negative tolerance");
  UnitValidation out;
  out.tol = unit_tol;
  out.defects.reserve(static_cast<std::size_t>(f.n()));
  const Mat eye = Mat::identity(f.k());
  for (int j = 0; j < f.n(); ++j) {
    const double d = op_norm(inner_product(f.vec(j), f.vec(j)) - eye);
    out.defects.push_back(d);
    if (d > out.max_defect) out.max_defect = d;
  }
  out.ok = out.max_defect <= unit_tol;
  return out;
}

const Mat& gram(const ModularFrame& f) {
  ModularFrame::Cache& c = *f.cache_;
  std::call_once(c.gram_once, [&] {
    const int k = f.k(), n = f.n();
    Mat g(n * k, n * k);
    for (int j = 0; j < n; ++j) {
      for (int l = j; l < n; ++l) {
        const Mat b = inner_product(f.vec(j), f.vec(l));
        for (int q = 0; q < k; ++q) {
          for (int p = 0; p < k; ++p) {
            g(j * k + p, l * k + q) = b(p, q);
            g(l * k + q, j * k + p) = std::conj(b(p, q));
          }
        }
      }
    }
    c.gram = std::move(g);
  });
  return c.gram;
}

Mat gram_block(const ModularFrame& f, int j, int l) {
  if (j < 0 || j >= f.n() || l < 0 || l >= f.n()) {
    throw InvalidInputError("gram_block: index out of range");
  }
  const Mat& g = gram(f);
  const int k = f.k();
  Mat b(k, k);
  for (int q = 0; q < k; ++q) {
    for (int p = 0; p < k; ++p) b(p, q) = g(j * k + p, l * k + q);
  }
  return b;
}

double coherence(const ModularFrame& f) {
  if (f.n() < 2) {
    throw InvalidInputError("coherence: undefined for fewer than two vectors");
  }
  const UnitValidation v = validate_unit_inner_product(f, 1e-8);
  if (!v.ok) {
    throw InvalidInputError("coherence: system is not unit (max defect " +
                            std::to_string(v.max_defect) + ")");
  }
  ModularFrame::Cache& c = *f.cache_;
  std::call_once(c.coherence_once, [&] {
    double mu = 0.0;
    for (int j = 0; j < f.n(); ++j) {
      for (int l = j + 1; l < f.n(); ++l) {
        mu = std::max(mu, op_norm(gram_block(f, j, l)));
      }
    }
    c.coherence = mu;
  });
  return c.coherence;
}

double sparsity_bound(const ModularFrame& f) {
  const double mu = coherence(f);
  if (mu <= 1e-8) return std::numeric_limits<double>::infinity();
  return 0.5 * (1.0 + 1.0 / mu);
}

namespace {

// tau_j laid out as the k x mk concatenation [tau_{j,1} ... tau_{j,m}].
Mat row_concat(const ModuleVector& v) {
  const int k = v.k(), m = v.size();
  Mat t(k, m * k);
  for (int i = 0; i < m; ++i) {
    for (int q = 0; q < k; ++q) {
      for (int p = 0; p < k; ++p) t(p, i * k + q) = v[i](p, q);
    }
  }
  return t;
}

}  // namespace

std::pair<double, double> frame_bounds(const ModularFrame& f, double tol) {
  if (tol < 0.0) throw InvalidInputError("frame_bounds: negative tolerance");
  ModularFrame::Cache& c = *f.cache_;
  std::call_once(c.bounds_once, [&] {
    const int k = f.k(), m = f.m();
    const std::size_t mk = static_cast<std::size_t>(m) * static_cast<std::size_t>(k);
    Mat s(m * k, m * k);
    for (int j = 0; j < f.n(); ++j) {
      const Mat t = row_concat(f.vec(j));
      kernels::zgemm_acc_ahb(mk, static_cast<std::size_t>(k), mk, t.data(),
                             static_cast<std::size_t>(k), t.data(),
                             static_cast<std::size_t>(k), s.data(), mk);
    }
    const lapack::Eigh e = lapack::eigh(hermitian_part(s), false);
    c.bounds = {e.w.front(), e.w.back()};
  });
  if (c.bounds.first <= tol) {
    throw NotAFrameError("frame_bounds: lower bound " + std::to_string(c.bounds.first) +
                         " is not above tolerance " + std::to_string(tol));
  }
  return c.bounds;
}

ModuleVector synthesis(const ModularFrame& f, const CoefficientVector& d) {
  if (d.k() != f.k() || d.size() != f.n()) {
    throw InvalidInputError("synthesis: coefficient shape does not match frame");
  }
  const std::size_t k = static_cast<std::size_t>(f.k());
  ModuleVector x = BlockVector::zero(f.k(), f.m());
  for (int j = 0; j < f.n(); ++j) {
    for (int i = 0; i < f.m(); ++i) {
      kernels::zgemm_acc(k, k, k, d[j].data(), k, f.vec(j)[i].data(), k,
                         x[i].data(), k);
    }
  }
  return x;
}

CoefficientVector analysis(const ModularFrame& f, const ModuleVector& x) {
  if (x.k() != f.k() || x.size() != f.m()) {
    throw InvalidInputError("analysis: module vector shape does not match frame");
  }
  const std::size_t k = static_cast<std::size_t>(f.k());
  CoefficientVector c = BlockVector::zero(f.k(), f.n());
  for (int j = 0; j < f.n(); ++j) {
    for (int i = 0; i < f.m(); ++i) {
      kernels::zgemm_acc_abh(k, k, k, x[i].data(), k, f.vec(j)[i].data(), k,
                             c[j].data(), k);
    }
  }
  return c;
}

ModularFrame random_unit_frame(int k, int m, int n, std::uint64_t seed) {
  if (k < 1 || m < 1 || n < 1) {
    throw InvalidInputError("random_unit_frame: k, m, n must be positive");
  }
  if (n < m) {
    throw InvalidInputError("random_unit_frame: need n >= m for a spanning system");
  }
  Rng rng(mix_seed(seed, (static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(m),
                   static_cast<std::uint64_t>(n)));
  std::vector<ModuleVector> vecs;
  vecs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Mat u = haar_unitary(m * k, rng);
    ModuleVector v = BlockVector::zero(k, m);
    for (int i = 0; i < m; ++i) {
      for (int q = 0; q < k; ++q) {
        for (int p = 0; p < k; ++p) v[i](p, q) = u(p, i * k + q);
      }
    }
    vecs.push_back(std::move(v));
  }
  return ModularFrame(k, m, std::move(vecs));
}

}  // namespace ncsr
