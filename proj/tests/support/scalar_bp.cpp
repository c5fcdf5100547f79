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

#include "support/scalar_bp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ncsr::testsupport {

namespace {

// Gauss-Jordan inverse with partial pivoting; g is square row-major.
std::vector<std::vector<Cz>> invert(std::vector<std::vector<Cz>> g) {
  const std::size_t m = g.size();
  std::vector<std::vector<Cz>> inv(m, std::vector<Cz>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
    }
    if (std::abs(g[piv][col]) < 1e-14) {
      throw std::runtime_error("scalar_basis_pursuit: singular gram matrix");
    }
    std::swap(g[piv], g[col]);
    std::swap(inv[piv], inv[col]);
    const Cz d = g[col][col];
    for (std::size_t c = 0; c < m; ++c) {
      g[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const Cz factor = g[r][col];
      if (factor == Cz(0.0)) continue;
      for (std::size_t c = 0; c < m; ++c) {
        g[r][c] -= factor * g[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<Cz> matvec(const std::vector<std::vector<Cz>>& a, const std::vector<Cz>& x) {
  std::vector<Cz> y(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    Cz acc = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
    y[r] = acc;
  }
  return y;
}

std::vector<Cz> adjvec(const std::vector<std::vector<Cz>>& a, std::size_t n,
                       const std::vector<Cz>& y) {
  std::vector<Cz> x(n);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) x[c] += std::conj(a[r][c]) * y[r];
  }
  return x;
}

double vnorm(const std::vector<Cz>& v) {
  double acc = 0.0;
  for (const Cz& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace

ScalarBpResult scalar_basis_pursuit(const std::vector<std::vector<Cz>>& a,
                                    const std::vector<Cz>& b, long max_iters) {
  const std::size_t m = a.size();
  if (m == 0 || b.size() != m) {
    throw std::invalid_argument("scalar_basis_pursuit: bad shapes");
  }
  const std::size_t n = a[0].size();

  std::vector<std::vector<Cz>> gram(m, std::vector<Cz>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      Cz acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a[r][j] * std::conj(a[c][j]);
      gram[r][c] = acc;
    }
  }
  const auto ginv = invert(gram);

  const auto project = [&](std::vector<Cz> v) {
    const auto corr = adjvec(a, n, matvec(ginv, matvec(a, v)));
    for (std::size_t j = 0; j < n; ++j) v[j] -= corr[j];
    return v;
  };
  const std::vector<Cz> p0 = adjvec(a, n, matvec(ginv, b));

  const double rho = 1.0;
  const double kappa = 1.0 / rho;
  std::vector<Cz> x(n), z(n), u(n);
  ScalarBpResult out;

  for (long it = 0; it < max_iters; ++it) {
    std::vector<Cz> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = z[j] - u[j];
    x = project(std::move(v));
    for (std::size_t j = 0; j < n; ++j) x[j] += p0[j];

    std::vector<Cz> zprev = z;
    for (std::size_t j = 0; j < n; ++j) {
      const Cz w = x[j] + u[j];
      const double r = std::abs(w);
      z[j] = (r > kappa) ? w * ((r - kappa) / r) : Cz(0.0);
    }
    for (std::size_t j = 0; j < n; ++j) u[j] += x[j] - z[j];

    double rnorm = 0.0, snorm = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      rnorm += std::norm(x[j] - z[j]);
      snorm += std::norm(z[j] - zprev[j]);
      scale = std::max(scale, std::abs(x[j]));
    }
    out.iterations = it + 1;
    const double eps = 1e-12 * std::sqrt(static_cast<double>(n)) +
                       1e-11 * std::max(1.0, scale);
    if (std::sqrt(rnorm) <= eps && rho * std::sqrt(snorm) <= eps) {
      out.converged = true;
      break;
    }
  }

  out.x = x;
  auto ax = matvec(a, x);
  for (std::size_t r = 0; r < m; ++r) ax[r] -= b[r];
  out.residual = vnorm(ax);
  for (const Cz& v : x) out.objective += std::abs(v);
  return out;
}

}  // namespace ncsr::testsupport
