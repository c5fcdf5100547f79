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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ncsr/blockvec.hpp"
#include "ncsr/errors.hpp"
#include "ncsr/frame.hpp"
#include "ncsr/nsp.hpp"
#include "ncsr/rng.hpp"
#include "ncsr/solvers.hpp"

using ncsr::BlockVector;
using ncsr::CoefficientVector;
using ncsr::Cplx;
using ncsr::Mat;
using ncsr::ModularFrame;
using ncsr::Rng;
using ncsr::SupportSet;

namespace {

ncsr::ModuleVector scalar_vec(std::vector<Cplx> entries) {
  std::vector<Mat> blocks;
  for (Cplx v : entries) {
    Mat b(1, 1);
    b(0, 0) = v;
    blocks.push_back(b);
  }
  return ncsr::ModuleVector(1, std::move(blocks));
}

ModularFrame micro_frame() {
  const double r = 1.0 / std::sqrt(2.0);
  return ModularFrame(1, 2,
                      {scalar_vec({1.0, 0.0}), scalar_vec({0.0, 1.0}),
                       scalar_vec({r, r})});
}

ModularFrame duplicated_frame() {
  return ModularFrame(1, 2,
                      {scalar_vec({1.0, 0.0}), scalar_vec({1.0, 0.0}),
                       scalar_vec({0.0, 1.0})});
}

Cplx flat_dot(const CoefficientVector& a, const CoefficientVector& b) {
  const auto fa = ncsr::flatten_vec(a);
  const auto fb = ncsr::flatten_vec(b);
  Cplx acc = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) acc += fa[i] * std::conj(fb[i]);
  return acc;
}

}  // namespace

TEST_CASE("kernel_basis dimensions and membership") {
  const ModularFrame ortho(1, 2, {scalar_vec({1.0, 0.0}), scalar_vec({0.0, 1.0})});
  CHECK(ncsr::kernel_basis(ortho).empty());

  const auto dup = ncsr::kernel_basis(duplicated_frame());
  REQUIRE(dup.size() == 1);
  const auto& d = dup[0];
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(ncsr::norm2(ncsr::synthesis(duplicated_frame(), d)) <= 1e-12);
  // direction (1, -1, 0)/sqrt(2) up to a global phase
  CHECK(std::abs(std::abs(d[0](0, 0)) - r) <= 1e-12);
  CHECK(std::abs(d[0](0, 0) + d[1](0, 0)) <= 1e-12);
  CHECK(std::abs(d[2](0, 0)) <= 1e-12);

  for (int seed = 0; seed < 5; ++seed) {
    const ModularFrame f = ncsr::random_unit_frame(2, 2, 4, 8000 + seed);
    const auto basis = ncsr::kernel_basis(f);
    CHECK(basis.size() == 8);  // (n - m) k^2
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(ncsr::norm2(ncsr::synthesis(f, basis[i])) <= 1e-10);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double expect = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(flat_dot(basis[i], basis[j])) - expect) <= 1e-10);
      }
    }
  }
}

TEST_CASE("worst_support picks the largest blocks") {
  const CoefficientVector d(1, {scalar_vec({3.0})[0], scalar_vec({1.0})[0],
                                scalar_vec({2.0})[0]});
  CHECK(ncsr::worst_support(d, 1) == SupportSet({0}, 3));
  CHECK(ncsr::worst_support(d, 2) == SupportSet({0, 2}, 3));
  CHECK(ncsr::worst_support(d, 3) == SupportSet::full(3));

  const CoefficientVector tie(1, {scalar_vec({1.0})[0], scalar_vec({1.0})[0]});
  CHECK(ncsr::worst_support(tie, 1) == SupportSet({0}, 2));

  CHECK_THROWS_AS(ncsr::worst_support(d, 0), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::worst_support(d, 4), ncsr::InvalidInputError);
}

TEST_CASE("worst_support maximizes over all supports of that size") {
  Rng rng(81);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 8;
    std::vector<Mat> blocks;
    for (int j = 0; j < n; ++j) blocks.push_back(ncsr::ginibre(2, 2, rng));
    const CoefficientVector d(2, std::move(blocks));
    const int order = 3;
    const SupportSet got = ncsr::worst_support(d, order);
    const double got_mass = ncsr::norm1(ncsr::restrict_to(d, got));
    // exhaustive maximum over C(8,3)
    double best = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          best = std::max(best, ncsr::norm1(ncsr::restrict_to(d, SupportSet({a, b, c}, n))));
        }
      }
    }
    CHECK(got_mass == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("nsp_falsify finds the duplicated-atom violation") {
  const ModularFrame f = duplicated_frame();
  const auto w = ncsr::nsp_falsify(f, 1, 100, 1);
  REQUIRE(w.has_value());
  CHECK(w->order == 1);
  CHECK(w->m.size() == 1);
  CHECK(w->lhs >= w->rhs - 1e-12);
  CHECK(ncsr::norm1(w->d) > 0.0);
  CHECK(ncsr::norm2(ncsr::synthesis(f, w->d)) <= 1e-8);
  CHECK(w->lhs == doctest::Approx(ncsr::norm1(ncsr::restrict_to(w->d, w->m))).epsilon(1e-12));
  CHECK(w->rhs == doctest::Approx(0.5 * ncsr::norm1(w->d)).epsilon(1e-12));
}

TEST_CASE("nsp_falsify returns nothing when the property holds") {
  // micro frame: mu = 1/sqrt2 certifies order 1
  CHECK_FALSE(ncsr::nsp_falsify(micro_frame(), 1, 2000, 2).has_value());
  // trivial kernel: nothing to violate at any order
  const ModularFrame ortho(1, 2, {scalar_vec({1.0, 0.0}), scalar_vec({0.0, 1.0})});
  CHECK_FALSE(ncsr::nsp_falsify(ortho, 2, 100, 3).has_value());
}

TEST_CASE("nsp_falsify validates arguments") {
  const ModularFrame f = micro_frame();
  CHECK_THROWS_AS(ncsr::nsp_falsify(f, 0, 10, 0), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::nsp_falsify(f, 4, 10, 0), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::nsp_falsify(f, 1, -1, 0), ncsr::InvalidInputError);
}

TEST_CASE("coherence certificate on fixed frames") {
  CHECK(ncsr::nsp_coherence_certificate(micro_frame(), 0));
  CHECK(ncsr::nsp_coherence_certificate(micro_frame(), 1));
  CHECK_FALSE(ncsr::nsp_coherence_certificate(micro_frame(), 2));

  CHECK(ncsr::nsp_coherence_certificate(duplicated_frame(), 0));
  CHECK_FALSE(ncsr::nsp_coherence_certificate(duplicated_frame(), 1));

  const ModularFrame ortho(1, 2, {scalar_vec({1.0, 0.0}), scalar_vec({0.0, 1.0})});
  CHECK(ncsr::nsp_coherence_certificate(ortho, 2));  // mu = 0, bound infinite

  CHECK_THROWS_AS(ncsr::nsp_coherence_certificate(micro_frame(), -1),
                  ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::nsp_coherence_certificate(micro_frame(), 4),
                  ncsr::InvalidInputError);
}

TEST_CASE("certificate and falsifier never contradict") {
  int certified = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int k = 1 + rep % 2;
    const int m = 2 + rep % 3;
    const int n = m + 1 + rep % 3;
    const ModularFrame f = ncsr::random_unit_frame(k, m, n, 9000 + rep);
    for (int order = 1; order <= n; ++order) {
      if (!ncsr::nsp_coherence_certificate(f, order)) break;
      CHECK_FALSE(ncsr::nsp_falsify(f, order, 300, 9100 + rep).has_value());
      ++certified;
    }
  }
  CHECK(certified >= 100);  // order 1 is certified for generic draws
}

TEST_CASE("nonuniqueness pair from a duplicated witness") {
  const ModularFrame f = duplicated_frame();
  const auto w = ncsr::nsp_falsify(f, 1, 100, 4);
  REQUIRE(w.has_value());
  const auto pair = ncsr::nonuniqueness_witness(f, *w);
  CHECK(ncsr::norm2(ncsr::synthesis(f, pair.c) - pair.x) <= 1e-12);
  CHECK(ncsr::norm2(ncsr::synthesis(f, pair.b) - pair.x) <= 1e-8);
  CHECK(ncsr::norm1(pair.b) <= ncsr::norm1(pair.c) + 1e-12);
  CHECK(ncsr::norm0(pair.c) <= w->order);
  // the two representations genuinely differ
  CHECK(ncsr::norm2(pair.c - pair.b) > 1e-6);
}

TEST_CASE("nonuniqueness_witness rejects inconsistent input") {
  const ModularFrame f = micro_frame();

  // kernel direction of the micro frame: tau1 + tau2 - sqrt2 tau3 = 0
  CoefficientVector d(1, {scalar_vec({1.0})[0], scalar_vec({1.0})[0],
                          scalar_vec({-std::sqrt(2.0)})[0]});
  REQUIRE(ncsr::norm2(ncsr::synthesis(f, d)) <= 1e-12);

  ncsr::NspWitness w;
  w.d = d;
  w.order = 1;
  w.m = SupportSet({2}, 3);
  w.lhs = ncsr::norm1(ncsr::restrict_to(d, w.m));
  w.rhs = 0.5 * ncsr::norm1(d);
  // lhs = sqrt2 < rhs = (2 + sqrt2)/2: no violation, must be rejected
  CHECK_THROWS_AS(ncsr::nonuniqueness_witness(f, w), ncsr::InvalidInputError);

  // vector not in the kernel
  ncsr::NspWitness bad;
  bad.d = CoefficientVector(1, {scalar_vec({1.0})[0], scalar_vec({0.0})[0],
                                scalar_vec({0.0})[0]});
  bad.order = 1;
  bad.m = SupportSet({0}, 3);
  bad.lhs = 1.0;
  bad.rhs = 0.5;
  CHECK_THROWS_AS(ncsr::nonuniqueness_witness(f, bad), ncsr::InvalidInputError);

  // shape mismatch
  ncsr::NspWitness shape;
  shape.d = CoefficientVector(1, {scalar_vec({1.0})[0], scalar_vec({-1.0})[0]});
  shape.order = 1;
  shape.m = SupportSet({0}, 2);
  shape.lhs = 1.0;
  shape.rhs = 1.0;
  CHECK_THROWS_AS(ncsr::nonuniqueness_witness(f, shape), ncsr::InvalidInputError);
}

TEST_CASE("equality witnesses convert cleanly") {
  // duplicated atoms give lhs == rhs exactly; the pair must still verify
  const ModularFrame f = duplicated_frame();
  CoefficientVector d(1, {scalar_vec({1.0})[0], scalar_vec({-1.0})[0],
                          scalar_vec({0.0})[0]});
  ncsr::NspWitness w;
  w.d = d;
  w.order = 1;
  w.m = SupportSet({0}, 3);
  w.lhs = 1.0;
  w.rhs = 1.0;
  const auto pair = ncsr::nonuniqueness_witness(f, w);
  CHECK(ncsr::norm1(pair.b) == doctest::Approx(ncsr::norm1(pair.c)).epsilon(1e-12));
  CHECK(ncsr::norm2(ncsr::synthesis(f, pair.b) - pair.x) <= 1e-12);
}
