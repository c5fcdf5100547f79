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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ncsr/errors.hpp"
#include "ncsr/frame.hpp"
#include "ncsr/harness.hpp"
#include "ncsr/nsp.hpp"
#include "ncsr/serialize.hpp"
#include "ncsr/solvers.hpp"

namespace {

// Exit codes: 0 success, 2 invalid input, 3 solver non-convergence or
// numerical failure, 4 fatal inconsistency.
constexpr int kOk = 0;
constexpr int kOther = 1;
constexpr int kInvalidInput = 2;
constexpr int kNoConvergence = 3;
constexpr int kFatal = 4;

int cmd_coherence(const std::string& frame_path) {
  const ncsr::ModularFrame f = ncsr::frame_from_json(ncsr::load_json_file(frame_path));
  const ncsr::UnitValidation unit = ncsr::validate_unit_inner_product(f);
  const auto bounds = ncsr::frame_bounds(f);
  ncsr::Json out{{"k", f.k()},
                 {"m", f.m()},
                 {"n", f.n()},
                 {"unit_ok", unit.ok},
                 {"max_unit_defect", unit.max_defect},
                 {"coherence", ncsr::coherence(f)},
                 {"sparsity_bound", ncsr::real_to_json(ncsr::sparsity_bound(f))},
                 {"frame_bounds", ncsr::Json::array({bounds.first, bounds.second})}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_recover(const std::string& frame_path, const std::string& x_path,
                const std::string& solver) {
  const ncsr::ModularFrame f = ncsr::frame_from_json(ncsr::load_json_file(frame_path));
  const ncsr::ModuleVector x = ncsr::module_from_json(ncsr::load_json_file(x_path));
  ncsr::SolverReport rep;
  if (solver == "bp") {
    rep = ncsr::bp_admm(f, x);
  } else if (solver == "oracle") {
    rep = ncsr::l0_oracle(f, x);
  } else {
    throw ncsr::InvalidInputError("unknown solver \"" + solver + "\" (use bp or oracle)");
  }
  std::cout << ncsr::report_to_json(rep).dump(2) << "\n";
  return rep.status == ncsr::SolverStatus::converged ? kOk : kNoConvergence;
}

int cmd_sweep(const std::string& config_path) {
  const ncsr::ExperimentConfig cfg =
      ncsr::experiment_config_from_json(ncsr::load_json_file(config_path));
  const ncsr::SweepResult result = ncsr::run_recovery_sweep(cfg);
  std::cout << result.summary.dump(2) << "\n";
  return kOk;
}

int cmd_nsp_check(const std::string& config_path) {
  const ncsr::NspCheckConfig cfg =
      ncsr::nsp_check_config_from_json(ncsr::load_json_file(config_path));
  const ncsr::NspConsistencyReport rep = ncsr::run_nsp_consistency(cfg);
  std::cout << ncsr::nsp_report_to_json(rep).dump(2) << "\n";
  return kOk;
}

int cmd_gen_frame(int k, int m, int n, std::uint64_t seed) {
  const ncsr::ModularFrame f = ncsr::random_unit_frame(k, m, n, seed);
  std::cout << ncsr::frame_to_json(f).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse recovery over matrix-algebra modules"};
  app.require_subcommand(1);

  std::string frame_path, x_path, config_path;
  std::string solver = "bp";
  int k = 1, m = 1, n = 1;
  std::uint64_t seed = 0;

  CLI::App* coherence = app.add_subcommand("coherence", "frame diagnostics as JSON");
  coherence->add_option("frame", frame_path, "frame JSON file")->required();

  CLI::App* recover = app.add_subcommand("recover", "solve for coefficients of x");
  recover->add_option("frame", frame_path, "frame JSON file")->required();
  recover->add_option("x", x_path, "module vector JSON file")->required();
  recover->add_option("--solver", solver, "bp (default) or oracle");

  CLI::App* sweep = app.add_subcommand("sweep", "plant-and-recover experiment");
  sweep->add_option("config", config_path, "experiment config JSON file")->required();

  CLI::App* nsp = app.add_subcommand("nsp-check", "NSP certificate/falsifier consistency");
  nsp->add_option("config", config_path, "NSP check config JSON file")->required();

  CLI::App* gen = app.add_subcommand("gen-frame", "generate a random unit frame");
  gen->add_option("--k", k, "block size")->required();
  gen->add_option("--m", m, "module rank")->required();
  gen->add_option("--n", n, "number of frame vectors")->required();
  gen->add_option("--seed", seed, "RNG seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (app.got_subcommand(coherence)) return cmd_coherence(frame_path);
    if (app.got_subcommand(recover)) return cmd_recover(frame_path, x_path, solver);
    if (app.got_subcommand(sweep)) return cmd_sweep(config_path);
    if (app.got_subcommand(nsp)) return cmd_nsp_check(config_path);
    if (app.got_subcommand(gen)) return cmd_gen_frame(k, m, n, seed);
  } catch (const ncsr::FatalInconsistencyError& e) {
    std::cerr << "fatal inconsistency: " << e.what() << "\n";
    return kFatal;
  } catch (const ncsr::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ncsr::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
