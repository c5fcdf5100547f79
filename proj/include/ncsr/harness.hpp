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

#ifndef NCSR_HARNESS_HPP_
#define NCSR_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ncsr/frame.hpp"
#include "ncsr/serialize.hpp"
#include "ncsr/solvers.hpp"

namespace ncsr {

enum class CoeffDistribution { ginibre, unitary, scalar_gaussian };
std::string to_string(CoeffDistribution d);
CoeffDistribution distribution_from_string(const std::string& s);

struct ExperimentConfig {
  int k = 1;
  int m = 8;
  int n = 12;
  std::vector<int> sparsity_list;
  int trials = 50;
  std::uint64_t seed = 0;
  CoeffDistribution distribution = CoeffDistribution::ginibre;
  bool fresh_frame_per_trial = true;
  int oracle_max_n = 14;  // l0_oracle runs only when n <= this
  BpParams solver;
  std::string output_csv = "sweep.csv";
  std::string output_summary = "sweep_summary.json";
};

ExperimentConfig experiment_config_from_json(const Json& j);
Json experiment_config_to_json(const ExperimentConfig& c);

// One row of the sweep.  Wall-clock fields stay out of the CSV so identical
// configs reproduce it byte for byte; they are aggregated in the summary.
struct TrialRecord {
  int trial = 0;
  int sparsity = 0;
  int k = 0;
  int m = 0;
  int n = 0;
  double coherence = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
  std::string bp_status;
  long bp_iterations = 0;
  double bp_objective = 0.0;
  double bp_rel_error = 0.0;
  bool bp_success = false;
  bool oracle_ran = false;
  int oracle_min_cardinality = -1;  // -1 when the oracle did not run
  bool oracle_unique = false;
  bool oracle_success = false;
  double bp_ms = 0.0;
  double oracle_ms = 0.0;
};

struct PlantedInstance {
  CoefficientVector c;
  ModuleVector x;
  SupportSet support;
};

// Uniform s-subset support, nonzero blocks per the distribution,
// x = synthesis(f, c).  Deterministic in (f, s, distribution, seed).
PlantedInstance plant_instance(const ModularFrame& f, int s, CoeffDistribution distribution,
                               std::uint64_t seed);

// Header plus one line per record, fixed column order, reals with 17
// significant digits, booleans as 0/1.
extern const char* const kCsvHeader;
std::string records_to_csv(const std::vector<TrialRecord>& records);

struct SweepResult {
  std::vector<TrialRecord> records;
  Json summary;
};

// Runs the plant-and-recover sweep, writes the CSV and the JSON summary to
// the configured paths, and returns both.  Per-trial solver failures are
// recorded, not fatal.
SweepResult run_recovery_sweep(const ExperimentConfig& cfg);

struct NspCheckConfig {
  int k = 1;
  int m = 4;
  int n = 6;
  int frames = 100;
  int num_samples = 10000;
  std::vector<int> extra_orders;  // absolute orders probed beyond the certified one
  int degenerate_frames = 20;     // duplicated/near-duplicated constructions
  std::uint64_t seed = 0;
};

NspCheckConfig nsp_check_config_from_json(const Json& j);
Json nsp_check_config_to_json(const NspCheckConfig& c);

struct NspConsistencyReport {
  int frames_checked = 0;
  int certified_order_checks = 0;
  int probe_checks = 0;
  int probe_witnesses = 0;
  int probe_verified = 0;
  int degenerate_checked = 0;
  int degenerate_witnesses = 0;
  int degenerate_verified = 0;
};

Json nsp_report_to_json(const NspConsistencyReport& r);

// For each random frame: derive the certified order from the coherence
// bound, demand the falsifier finds nothing there (a witness is a
// FatalInconsistencyError), then probe the extra orders and verify every
// witness found via nonuniqueness_witness.  Degenerate frames alternate
// duplicated (witness expected at order 1) and near-duplicated (certified
// at order 1, no witness allowed) constructions.
NspConsistencyReport run_nsp_consistency(const NspCheckConfig& cfg);

}  // namespace ncsr

#endif  // NCSR_HARNESS_HPP_
