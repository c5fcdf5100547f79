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

#ifndef NCSR_SERIALIZE_HPP_
#define NCSR_SERIALIZE_HPP_

#include <string>

#include "json.hpp"
#include "ncsr/blockvec.hpp"
#include "ncsr/frame.hpp"
#include "ncsr/nsp.hpp"
#include "ncsr/solvers.hpp"
#include "ncsr/types.hpp"

namespace ncsr {

using Json = nlohmann::json;

// Matrices are row-major nested arrays of [re, im] pairs.  Readers also
// accept bare numbers for real entries.  Support indices are 1-based on
// the wire and 0-based in memory.
Json mat_to_json(const Mat& a);
Mat mat_from_json(const Json& j);

// Non-finite reals round-trip as the strings "inf", "-inf", "nan".
Json real_to_json(double v);
double real_from_json(const Json& j);

Json coeff_to_json(const CoefficientVector& v);   // {"k", "n", "blocks"}
CoefficientVector coeff_from_json(const Json& j);
Json module_to_json(const ModuleVector& v);       // {"k", "m", "blocks"}
ModuleVector module_from_json(const Json& j);

Json frame_to_json(const ModularFrame& f);        // {"k", "m", "n", "vectors"}
ModularFrame frame_from_json(const Json& j);

Json support_to_json(const SupportSet& m);
SupportSet support_from_json(const Json& j, int universe);

Json report_to_json(const SolverReport& r);

Json witness_to_json(const NspWitness& w);
NspWitness witness_from_json(const Json& j);

// Both throw InvalidInputError on I/O or parse failure.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace ncsr

#endif  // NCSR_SERIALIZE_HPP_
