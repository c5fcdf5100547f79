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
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "ncsr/errors.hpp"
#include "ncsr/frame.hpp"
#include "ncsr/nsp.hpp"
#include "ncsr/rng.hpp"
#include "ncsr/serialize.hpp"
#include "ncsr/solvers.hpp"

using ncsr::Cplx;
using ncsr::Json;
using ncsr::Mat;

TEST_CASE("matrix json round-trip") {
  ncsr::Rng rng(91);
  for (int rep = 0; rep < 20; ++rep) {
    const Mat a = ncsr::ginibre(1 + rep % 3, 1 + (rep / 3) % 3, rng);
    const Mat b = ncsr::mat_from_json(ncsr::mat_to_json(a));
    CHECK(a == b);  // bit-exact through the double-precision json writer
  }

  // row-major layout on the wire
  Mat a(2, 3);
  a(0, 1) = Cplx(5.0, -2.0);
  a(1, 2) = 7.0;
  const Json j = ncsr::mat_to_json(a);
  CHECK(j.size() == 2);
  CHECK(j[0].size() == 3);
  CHECK(j[0][1][0].get<double>() == 5.0);
  CHECK(j[0][1][1].get<double>() == -2.0);
  CHECK(j[1][2][0].get<double>() == 7.0);
}

TEST_CASE("matrix json accepts bare reals and rejects garbage") {
  const Json j = Json::parse("[[1, 2], [3, [4, -1]]]");
  const Mat a = ncsr::mat_from_json(j);
  CHECK(a(0, 0) == Cplx(1.0));
  CHECK(a(1, 1) == Cplx(4.0, -1.0));

  CHECK_THROWS_AS(ncsr::mat_from_json(Json::parse("5")), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::mat_from_json(Json::parse("[]")), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::mat_from_json(Json::parse("[[\"x\"]]")), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::mat_from_json(Json::parse("[[1],[1,2]]")), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::mat_from_json(Json::parse("[[[1,2,3]]]")), ncsr::InvalidInputError);
}

TEST_CASE("non-finite reals as strings") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(ncsr::real_to_json(inf).get<std::string>() == "inf");
  CHECK(ncsr::real_to_json(-inf).get<std::string>() == "-inf");
  CHECK(ncsr::real_to_json(1.5).get<double>() == 1.5);
  CHECK(std::isinf(ncsr::real_from_json(Json("inf"))));
  CHECK(ncsr::real_from_json(Json("-inf")) < 0.0);
  CHECK(std::isnan(ncsr::real_from_json(Json("nan"))));
  CHECK(ncsr::real_from_json(Json(2.5)) == 2.5);
  CHECK_THROWS_AS(ncsr::real_from_json(Json("wide")), ncsr::InvalidInputError);
}

TEST_CASE("coefficient and module vector round-trip") {
  ncsr::Rng rng(92);
  std::vector<Mat> blocks;
  for (int j = 0; j < 4; ++j) blocks.push_back(ncsr::ginibre(2, 2, rng));
  const ncsr::CoefficientVector c(2, blocks);
  const Json j = ncsr::coeff_to_json(c);
  CHECK(j.at("k") == 2);
  CHECK(j.at("n") == 4);
  CHECK(ncsr::coeff_from_json(j) == c);

  const ncsr::ModuleVector x(2, blocks);
  const Json jm = ncsr::module_to_json(x);
  CHECK(jm.at("m") == 4);
  CHECK(ncsr::module_from_json(jm) == x);

  CHECK_THROWS_AS(ncsr::coeff_from_json(Json::parse("{\"k\":1}")), ncsr::InvalidInputError);
}

TEST_CASE("frame round-trip preserves every entry") {
  const ncsr::ModularFrame f = ncsr::random_unit_frame(2, 3, 5, 93);
  const Json j = ncsr::frame_to_json(f);
  CHECK(j.at("k") == 2);
  CHECK(j.at("m") == 3);
  CHECK(j.at("n") == 5);
  CHECK(j.at("vectors").size() == 5);
  const ncsr::ModularFrame g = ncsr::frame_from_json(j);
  for (int v = 0; v < 5; ++v) CHECK(ncsr::norm2(f.vec(v) - g.vec(v)) == 0.0);

  Json bad = j;
  bad["n"] = 6;
  CHECK_THROWS_AS(ncsr::frame_from_json(bad), ncsr::InvalidInputError);
  bad = j;
  bad.erase("vectors");
  CHECK_THROWS_AS(ncsr::frame_from_json(bad), ncsr::InvalidInputError);
}

TEST_CASE("supports are 1-based on the wire") {
  const ncsr::SupportSet m({0, 2, 4}, 6);
  const Json j = ncsr::support_to_json(m);
  CHECK(j == Json::parse("[1, 3, 5]"));
  CHECK(ncsr::support_from_json(j, 6) == m);
  CHECK_THROWS_AS(ncsr::support_from_json(Json::parse("[0]"), 6), ncsr::InvalidInputError);
  CHECK_THROWS_AS(ncsr::support_from_json(Json::parse("[7]"), 6), ncsr::InvalidInputError);
}

TEST_CASE("solver report serialization") {
  const ncsr::ModularFrame f = ncsr::random_unit_frame(1, 2, 3, 94);
  const auto bp = ncsr::bp_admm(f, f.vec(0));
  const Json jb = ncsr::report_to_json(bp);
  CHECK(jb.at("status") == "converged");
  CHECK(jb.contains("objective"));
  CHECK(jb.contains("residual"));
  CHECK(jb.contains("iterations"));
  CHECK(jb.contains("solution"));
  CHECK_FALSE(jb.contains("min_cardinality"));
  CHECK_FALSE(jb.contains("supports"));
  CHECK_FALSE(jb.contains("unique"));

  const auto l0 = ncsr::l0_oracle(f, f.vec(0));
  const Json jo = ncsr::report_to_json(l0);
  CHECK(jo.at("min_cardinality") == 1);
  CHECK(jo.at("unique").is_boolean());
  CHECK(jo.at("supports").is_array());
  CHECK(jo.at("supports")[0].is_array());
}

TEST_CASE("witness round-trip") {
  const ncsr::ModularFrame f(1, 2,
                             {ncsr::ModuleVector(1, {Mat::identity(1), Mat(1, 1)}),
                              ncsr::ModuleVector(1, {Mat::identity(1), Mat(1, 1)})});
  const auto w = ncsr::nsp_falsify(f, 1, 50, 5);
  REQUIRE(w.has_value());
  const Json j = ncsr::witness_to_json(*w);
  CHECK(j.at("order") == 1);
  CHECK(j.at("M").is_array());
  CHECK(j.at("M")[0].get<int>() >= 1);
  const ncsr::NspWitness back = ncsr::witness_from_json(j);
  CHECK(back.order == w->order);
  CHECK(back.m == w->m);
  CHECK(back.lhs == doctest::Approx(w->lhs).epsilon(1e-15));
  CHECK(ncsr::norm2(back.d - w->d) == 0.0);
}

TEST_CASE("json file io") {
  const std::string path = "ncsr_test_io.json";
  const Json j = Json{{"a", 1}, {"b", "two"}};
  ncsr::save_json_file(path, j);
  const Json back = ncsr::load_json_file(path);
  CHECK(back == j);
  std::remove(path.c_str());

  CHECK_THROWS_AS(ncsr::load_json_file("definitely/not/here.json"), ncsr::InvalidInputError);

  FILE* fp = std::fopen("ncsr_test_bad.json", "w");
  REQUIRE(fp != nullptr);
  std::fputs("{ not json", fp);
  std::fclose(fp);
  CHECK_THROWS_AS(ncsr::load_json_file("ncsr_test_bad.json"), ncsr::InvalidInputError);
  std::remove("ncsr_test_bad.json");
}
