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

#include "ncsr/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "ncsr/errors.hpp"

namespace ncsr {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInputError(what); }

Cplx entry_from_json(const Json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Cplx(j[0].get<double>(), j[1].get<double>());
  }
  bad("matrix entry must be a number or an [re, im] pair");
}

}  // namespace

Json mat_to_json(const Mat& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) {
      row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty arrays");
  const int cols = static_cast<int>(j[0].size());
  Mat a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      bad("matrix rows must have equal length");
    }
    for (int c = 0; c < cols; ++c) {
      a(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return a;
}

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  bad("expected a real number or one of \"inf\", \"-inf\", \"nan\"");
}

namespace {

Json blocks_to_json(const BlockVector& v) {
  Json blocks = Json::array();
  for (int j = 0; j < v.size(); ++j) blocks.push_back(mat_to_json(v[j]));
  return blocks;
}

BlockVector blocks_from_json(const Json& j, int k, int len, const char* who) {
  if (!j.is_array() || static_cast<int>(j.size()) != len) {
    bad(std::string(who) + ": blocks must be an array of the declared length");
  }
  std::vector<Mat> blocks;
  blocks.reserve(static_cast<std::size_t>(len));
  for (const Json& b : j) {
    Mat m = mat_from_json(b);
    if (m.rows() != k || m.cols() != k) bad(std::string(who) + ": block is not k x k");
    blocks.push_back(std::move(m));
  }
  return BlockVector(k, std::move(blocks));
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    bad(std::string("missing or non-integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json coeff_to_json(const CoefficientVector& v) {
  return Json{{"k", v.k()}, {"n", v.size()}, {"blocks", blocks_to_json(v)}};
}

CoefficientVector coeff_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  if (k < 1 || n < 0) bad("coefficient vector: k must be >= 1 and n >= 0");
  if (!j.contains("blocks")) bad("coefficient vector: missing \"blocks\"");
  return blocks_from_json(j["blocks"], k, n, "coefficient vector");
}

Json module_to_json(const ModuleVector& v) {
  return Json{{"k", v.k()}, {"m", v.size()}, {"blocks", blocks_to_json(v)}};
}

ModuleVector module_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int m = int_field(j, "m");
  if (k < 1 || m < 0) bad("module vector: k must be >= 1 and m >= 0");
  if (!j.contains("blocks")) bad("module vector: missing \"blocks\"");
  return blocks_from_json(j["blocks"], k, m, "module vector");
}

Json frame_to_json(const ModularFrame& f) {
  Json vectors = Json::array();
  for (int j = 0; j < f.n(); ++j) vectors.push_back(blocks_to_json(f.vec(j)));
  return Json{{"k", f.k()}, {"m", f.m()}, {"n", f.n()}, {"vectors", std::move(vectors)}};
}

ModularFrame frame_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int m = int_field(j, "m");
  const int n = int_field(j, "n");
  if (!j.contains("vectors") || !j["vectors"].is_array() ||
      static_cast<int>(j["vectors"].size()) != n) {
    bad("frame: \"vectors\" must be an array of length n");
  }
  std::vector<ModuleVector> vecs;
  vecs.reserve(static_cast<std::size_t>(n));
  for (const Json& v : j["vectors"]) {
    vecs.push_back(blocks_from_json(v, k, m, "frame vector"));
  }
  return ModularFrame(k, m, std::move(vecs));
}

Json support_to_json(const SupportSet& m) {
  Json arr = Json::array();
  for (int j : m.indices()) arr.push_back(j + 1);
  return arr;
}

SupportSet support_from_json(const Json& j, int universe) {
  if (!j.is_array()) bad("support: expected an array of 1-based indices");
  std::vector<int> idx;
  idx.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer()) bad("support: indices must be integers");
    idx.push_back(v.get<int>() - 1);
  }
  return SupportSet(std::move(idx), universe);
}

Json report_to_json(const SolverReport& r) {
  Json j{{"status", to_string(r.status)},
         {"objective", real_to_json(r.objective)},
         {"residual", real_to_json(r.feasibility_residual)},
         {"iterations", r.iterations},
         {"solution", coeff_to_json(r.solution)}};
  if (r.min_cardinality) {
    j["min_cardinality"] = *r.min_cardinality;
    Json sup = Json::array();
    for (const SupportSet& m : r.supports) sup.push_back(support_to_json(m));
    j["supports"] = std::move(sup);
  }
  if (r.unique) j["unique"] = *r.unique;
  return j;
}

Json witness_to_json(const NspWitness& w) {
  return Json{{"order", w.order},
              {"M", support_to_json(w.m)},
              {"lhs", real_to_json(w.lhs)},
              {"rhs", real_to_json(w.rhs)},
              {"d", coeff_to_json(w.d)}};
}

NspWitness witness_from_json(const Json& j) {
  NspWitness w;
  w.order = int_field(j, "order");
  if (!j.contains("d")) bad("witness: missing \"d\"");
  w.d = coeff_from_json(j["d"]);
  if (!j.contains("M")) bad("witness: missing \"M\"");
  w.m = support_from_json(j["M"], w.d.size());
  if (!j.contains("lhs") || !j.contains("rhs")) bad("witness: missing lhs/rhs");
  w.lhs = real_from_json(j["lhs"]);
  w.rhs = real_from_json(j["rhs"]);
  return w;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("parse error in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) bad("failed writing " + path);
}

}  // namespace ncsr
