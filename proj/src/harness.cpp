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

#include "ncsr/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "ncsr/errors.hpp"
#include "ncsr/nsp.hpp"
#include "ncsr/rng.hpp"

namespace ncsr {

std::string to_string(CoeffDistribution d) {
  switch (d) {
    case CoeffDistribution::ginibre: return "ginibre";
    case CoeffDistribution::unitary: return "unitary";
    case CoeffDistribution::scalar_gaussian: return "scalar-gaussian";
  }
  return "unknown";
}

CoeffDistribution distribution_from_string(const std::string& s) {
  if (s == "ginibre") return CoeffDistribution::ginibre;
  if (s == "unitary") return CoeffDistribution::unitary;
  if (s == "scalar-gaussian") return CoeffDistribution::scalar_gaussian;
  throw InvalidInputError("unknown coefficient distribution \"" + s + "\"");
}

namespace {

constexpr std::uint64_t kFrameTag = 0x6672616dULL;
constexpr std::uint64_t kPlantTag = 0x706c6e74ULL;
constexpr std::uint64_t kNspFrameTag = 0x6e734672ULL;
constexpr std::uint64_t kNspRunTag = 0x6e735275ULL;
constexpr std::uint64_t kDegenTag = 0x64656765ULL;

void check_known_keys(const Json& j, const std::set<std::string>& known, const char* who) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw InvalidInputError(std::string(who) + ": unknown field \"" + it.key() + "\"");
    }
  }
}

std::uint64_t seed_field(const Json& j) {
  if (!j.contains("seed")) return 0;
  const Json& s = j["seed"];
  if (s.is_number_unsigned()) return s.get<std::uint64_t>();
  if (s.is_number_integer() && s.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(s.get<std::int64_t>());
  }
  throw InvalidInputError("seed must be a nonnegative integer");
}

BpParams solver_from_json(const Json& j) {
  check_known_keys(j, {"rho", "max_iters", "eps_abs", "eps_rel", "feas_tol", "zero_tol",
                       "debias"},
                   "solver");
  BpParams p;
  if (j.contains("rho")) p.rho = j["rho"].get<double>();
  if (j.contains("max_iters")) p.max_iters = j["max_iters"].get<long>();
  if (j.contains("eps_abs")) p.eps_abs = j["eps_abs"].get<double>();
  if (j.contains("eps_rel")) p.eps_rel = j["eps_rel"].get<double>();
  if (j.contains("feas_tol")) p.feas_tol = j["feas_tol"].get<double>();
  if (j.contains("zero_tol")) p.zero_tol = j["zero_tol"].get<double>();
  if (j.contains("debias")) p.debias = j["debias"].get<bool>();
  return p;
}

Json solver_to_json(const BpParams& p) {
  return Json{{"rho", p.rho},         {"max_iters", p.max_iters},
              {"eps_abs", p.eps_abs}, {"eps_rel", p.eps_rel},
              {"feas_tol", p.feas_tol}, {"zero_tol", p.zero_tol},
              {"debias", p.debias}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Largest order the coherence bound certifies, in [0, n]: the biggest
// integer s with s + kCertificateSlack < bound, matching
// nsp_coherence_certificate.
int certified_order(double bound, int n) {
  if (std::isinf(bound)) return n;
  int s = static_cast<int>(std::ceil(bound - kCertificateSlack)) - 1;
  if (s < 0) s = 0;
  if (s > n) s = n;
  return s;
}

ModuleVector vec_from_rows(const Mat& u, int k, int m, int row_block) {
  ModuleVector v = BlockVector::zero(k, m);
  for (int i = 0; i < m; ++i) {
    for (int q = 0; q < k; ++q) {
      for (int p = 0; p < k; ++p) v[i](p, q) = u(row_block * k + p, i * k + q);
    }
  }
  return v;
}

}  // namespace

ExperimentConfig experiment_config_from_json(const Json& j) {
  check_known_keys(j,
                   {"k", "m", "n", "sparsity_list", "trials", "seed", "distribution",
                    "fresh_frame_per_trial", "oracle_max_n", "solver", "output_csv",
                    "output_summary"},
                   "experiment config");
  ExperimentConfig c;
  try {
    if (j.contains("k")) c.k = j["k"].get<int>();
    if (j.contains("m")) c.m = j["m"].get<int>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("sparsity_list")) {
      c.sparsity_list = j["sparsity_list"].get<std::vector<int>>();
    }
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    c.seed = seed_field(j);
    if (j.contains("distribution")) {
      c.distribution = distribution_from_string(j["distribution"].get<std::string>());
    }
    if (j.contains("fresh_frame_per_trial")) {
      c.fresh_frame_per_trial = j["fresh_frame_per_trial"].get<bool>();
    }
    if (j.contains("oracle_max_n")) c.oracle_max_n = j["oracle_max_n"].get<int>();
    if (j.contains("solver")) c.solver = solver_from_json(j["solver"]);
    if (j.contains("output_csv")) c.output_csv = j["output_csv"].get<std::string>();
    if (j.contains("output_summary")) c.output_summary = j["output_summary"].get<std::string>();
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("experiment config: ") + e.what());
  }
  if (c.k < 1 || c.m < 1 || c.n < 1) throw InvalidInputError("experiment config: bad shape");
  if (c.trials < 1) throw InvalidInputError("experiment config: trials must be >= 1");
  for (int s : c.sparsity_list) {
    if (s < 1 || s > c.n) {
      throw InvalidInputError("experiment config: sparsity values must lie in [1, n]");
    }
  }
  return c;
}

Json experiment_config_to_json(const ExperimentConfig& c) {
  return Json{{"k", c.k},
              {"m", c.m},
              {"n", c.n},
              {"sparsity_list", c.sparsity_list},
              {"trials", c.trials},
              {"seed", c.seed},
              {"distribution", to_string(c.distribution)},
              {"fresh_frame_per_trial", c.fresh_frame_per_trial},
              {"oracle_max_n", c.oracle_max_n},
              {"solver", solver_to_json(c.solver)},
              {"output_csv", c.output_csv},
              {"output_summary", c.output_summary}};
}

PlantedInstance plant_instance(const ModularFrame& f, int s, CoeffDistribution distribution,
                               std::uint64_t seed) {
  if (s < 1 || s > f.n()) throw InvalidInputError("plant_instance: need 1 <= s <= n");
  if (distribution == CoeffDistribution::scalar_gaussian && f.k() != 1) {
    throw InvalidInputError("plant_instance: scalar-gaussian requires k = 1");
  }
  Rng rng(mix_seed(seed, kPlantTag, static_cast<std::uint64_t>(s)));
  PlantedInstance out;
  out.support = SupportSet(sample_subset(f.n(), s, rng), f.n());
  out.c = BlockVector::zero(f.k(), f.n());
  for (int j : out.support.indices()) {
    Mat block(f.k(), f.k());
    do {
      switch (distribution) {
        case CoeffDistribution::ginibre: block = ginibre(f.k(), f.k(), rng); break;
        case CoeffDistribution::unitary: block = haar_unitary(f.k(), rng); break;
        case CoeffDistribution::scalar_gaussian:
          block = Mat(1, 1);
          block(0, 0) = rng.cgauss();
          break;
      }
    } while (op_norm(block) <= 1e-8);
    out.c[j] = block;
  }
  out.x = synthesis(f, out.c);
  return out;
}

const char* const kCsvHeader =
    "trial,sparsity,k,m,n,coherence,bound,bound_satisfied,bp_status,bp_iterations,"
    "bp_objective,bp_rel_error,bp_success,oracle_ran,oracle_min_cardinality,"
    "oracle_unique,oracle_success";

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = kCsvHeader;
  out += "\n";
  for (const TrialRecord& r : records) {
    out += std::to_string(r.trial) + "," + std::to_string(r.sparsity) + "," +
           std::to_string(r.k) + "," + std::to_string(r.m) + "," + std::to_string(r.n) +
           "," + fmt_real(r.coherence) + "," + fmt_real(r.bound) + "," +
           (r.bound_satisfied ? "1" : "0") + "," + r.bp_status + "," +
           std::to_string(r.bp_iterations) + "," + fmt_real(r.bp_objective) + "," +
           fmt_real(r.bp_rel_error) + "," + (r.bp_success ? "1" : "0") + "," +
           (r.oracle_ran ? "1" : "0") + "," + std::to_string(r.oracle_min_cardinality) +
           "," + (r.oracle_unique ? "1" : "0") + "," + (r.oracle_success ? "1" : "0") +
           "\n";
  }
  return out;
}

namespace {

Json rate_or_null(long hits, long total) {
  if (total == 0) return nullptr;
  return static_cast<double>(hits) / static_cast<double>(total);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw InvalidInputError("failed writing " + path);
}

}  // namespace

SweepResult run_recovery_sweep(const ExperimentConfig& cfg) {
  // Re-validate so programmatically built configs get the same checks.
  if (cfg.k < 1 || cfg.m < 1 || cfg.n < 1 || cfg.trials < 1) {
    throw InvalidInputError("run_recovery_sweep: bad config shape");
  }
  if (cfg.n < cfg.m) {
    throw InvalidInputError("run_recovery_sweep: need n >= m to generate frames");
  }
  for (int s : cfg.sparsity_list) {
    if (s < 1 || s > cfg.n) throw InvalidInputError("run_recovery_sweep: bad sparsity value");
  }

  SweepResult result;
  std::optional<ModularFrame> shared;
  if (!cfg.fresh_frame_per_trial) {
    shared = random_unit_frame(cfg.k, cfg.m, cfg.n, mix_seed(cfg.seed, kFrameTag, 0));
  }

  const double kRecoveryTol = 1e-6;
  for (std::size_t si = 0; si < cfg.sparsity_list.size(); ++si) {
    const int s = cfg.sparsity_list[si];
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t combo =
          (static_cast<std::uint64_t>(si) << 32) | static_cast<std::uint64_t>(t);
      const ModularFrame frame =
          cfg.fresh_frame_per_trial
              ? random_unit_frame(cfg.k, cfg.m, cfg.n, mix_seed(cfg.seed, kFrameTag, combo))
              : *shared;

      TrialRecord rec;
      rec.trial = t;
      rec.sparsity = s;
      rec.k = cfg.k;
      rec.m = cfg.m;
      rec.n = cfg.n;
      rec.coherence = coherence(frame);
      rec.bound = sparsity_bound(frame);
      rec.bound_satisfied = static_cast<double>(s) < rec.bound;

      const PlantedInstance inst =
          plant_instance(frame, s, cfg.distribution, mix_seed(cfg.seed, kPlantTag, combo));
      const double planted_norm = norm2(inst.c);

      const auto bp_t0 = std::chrono::steady_clock::now();
      try {
        const SolverReport bp = bp_admm(frame, inst.x, cfg.solver);
        rec.bp_status = to_string(bp.status);
        rec.bp_iterations = bp.iterations;
        rec.bp_objective = bp.objective;
        rec.bp_rel_error = norm2(bp.solution - inst.c) / planted_norm;
        rec.bp_success =
            (bp.status == SolverStatus::converged) && rec.bp_rel_error <= kRecoveryTol;
      } catch (const NumericalError&) {
        rec.bp_status = "error";
      }
      rec.bp_ms = elapsed_ms(bp_t0);

      if (cfg.n <= cfg.oracle_max_n) {
        const auto or_t0 = std::chrono::steady_clock::now();
        try {
          L0Options opts;
          opts.zero_tol = cfg.solver.zero_tol;
          opts.feas_tol = cfg.solver.feas_tol;
          const SolverReport oracle = l0_oracle(frame, inst.x, opts);
          rec.oracle_ran = true;
          rec.oracle_min_cardinality = oracle.min_cardinality.value_or(-1);
          rec.oracle_unique = oracle.unique.value_or(false);
          const double rel = norm2(oracle.solution - inst.c) / planted_norm;
          rec.oracle_success =
              (oracle.status == SolverStatus::converged) && rel <= kRecoveryTol;
        } catch (const NumericalError&) {
          rec.oracle_ran = true;
          rec.oracle_min_cardinality = -1;
        }
        rec.oracle_ms = elapsed_ms(or_t0);
      }

      result.records.push_back(std::move(rec));
    }
  }

  // Aggregate: success rates conditioned on the certified stratum.
  long bs_total = 0, bs_bp = 0, bs_oracle_total = 0, bs_oracle = 0, bs_unique = 0;
  Json per_sparsity = Json::array();
  for (std::size_t si = 0; si < cfg.sparsity_list.size(); ++si) {
    const int s = cfg.sparsity_list[si];
    long n_trials = 0, n_bs = 0, n_bp_bs = 0, n_or_run_bs = 0, n_or_bs = 0, n_uq_bs = 0;
    long n_bp_all = 0;
    double bp_ms = 0.0, or_ms = 0.0;
    for (const TrialRecord& r : result.records) {
      if (r.sparsity != s) continue;
      ++n_trials;
      bp_ms += r.bp_ms;
      or_ms += r.oracle_ms;
      if (r.bp_success) ++n_bp_all;
      if (!r.bound_satisfied) continue;
      ++n_bs;
      if (r.bp_success) ++n_bp_bs;
      if (r.oracle_ran) {
        ++n_or_run_bs;
        if (r.oracle_success) ++n_or_bs;
        if (r.oracle_unique) ++n_uq_bs;
      }
    }
    bs_total += n_bs;
    bs_bp += n_bp_bs;
    bs_oracle_total += n_or_run_bs;
    bs_oracle += n_or_bs;
    bs_unique += n_uq_bs;
    per_sparsity.push_back(
        Json{{"sparsity", s},
             {"trials", n_trials},
             {"bound_satisfied", n_bs},
             {"bp_success_rate", rate_or_null(n_bp_all, n_trials)},
             {"bp_success_rate_bound_satisfied", rate_or_null(n_bp_bs, n_bs)},
             {"oracle_success_rate_bound_satisfied", rate_or_null(n_or_bs, n_or_run_bs)},
             {"oracle_unique_rate_bound_satisfied", rate_or_null(n_uq_bs, n_or_run_bs)},
             {"mean_bp_ms", n_trials ? bp_ms / static_cast<double>(n_trials) : 0.0},
             {"mean_oracle_ms", n_trials ? or_ms / static_cast<double>(n_trials) : 0.0}});
  }

  result.summary = Json{
      {"config", experiment_config_to_json(cfg)},
      {"record_count", result.records.size()},
      {"per_sparsity", std::move(per_sparsity)},
      {"bound_satisfied_count", bs_total},
      {"bp_success_rate_bound_satisfied", rate_or_null(bs_bp, bs_total)},
      {"oracle_success_rate_bound_satisfied", rate_or_null(bs_oracle, bs_oracle_total)},
      {"oracle_unique_rate_bound_satisfied", rate_or_null(bs_unique, bs_oracle_total)}};

  write_text_file(cfg.output_csv, records_to_csv(result.records));
  save_json_file(cfg.output_summary, result.summary);
  return result;
}

NspCheckConfig nsp_check_config_from_json(const Json& j) {
  check_known_keys(j,
                   {"k", "m", "n", "frames", "num_samples", "extra_orders",
                    "degenerate_frames", "seed"},
                   "nsp check config");
  NspCheckConfig c;
  try {
    if (j.contains("k")) c.k = j["k"].get<int>();
    if (j.contains("m")) c.m = j["m"].get<int>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("frames")) c.frames = j["frames"].get<int>();
    if (j.contains("num_samples")) c.num_samples = j["num_samples"].get<int>();
    if (j.contains("extra_orders")) c.extra_orders = j["extra_orders"].get<std::vector<int>>();
    if (j.contains("degenerate_frames")) c.degenerate_frames = j["degenerate_frames"].get<int>();
    c.seed = seed_field(j);
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("nsp check config: ") + e.what());
  }
  for (int o : c.extra_orders) {
    if (o < 1 || o > c.n) {
      throw InvalidInputError("nsp check config: extra orders must lie in [1, n]");
    }
  }
  return c;
}

Json nsp_check_config_to_json(const NspCheckConfig& c) {
  return Json{{"k", c.k},
              {"m", c.m},
              {"n", c.n},
              {"frames", c.frames},
              {"num_samples", c.num_samples},
              {"extra_orders", c.extra_orders},
              {"degenerate_frames", c.degenerate_frames},
              {"seed", c.seed}};
}

Json nsp_report_to_json(const NspConsistencyReport& r) {
  return Json{{"frames_checked", r.frames_checked},
              {"certified_order_checks", r.certified_order_checks},
              {"probe_checks", r.probe_checks},
              {"probe_witnesses", r.probe_witnesses},
              {"probe_verified", r.probe_verified},
              {"degenerate_checked", r.degenerate_checked},
              {"degenerate_witnesses", r.degenerate_witnesses},
              {"degenerate_verified", r.degenerate_verified}};
}

NspConsistencyReport run_nsp_consistency(const NspCheckConfig& cfg) {
  if (cfg.k < 1 || cfg.m < 1 || cfg.n < 1 || cfg.frames < 0 || cfg.num_samples < 0 ||
      cfg.degenerate_frames < 0) {
    throw InvalidInputError("run_nsp_consistency: bad config");
  }
  if (cfg.frames > 0 && cfg.n < cfg.m) {
    throw InvalidInputError("run_nsp_consistency: need n >= m for random frames");
  }
  if (cfg.degenerate_frames > 0 && cfg.m < 2) {
    throw InvalidInputError("run_nsp_consistency: degenerate frames need m >= 2");
  }
  for (int o : cfg.extra_orders) {
    if (o < 1 || o > cfg.n) {
      throw InvalidInputError("run_nsp_consistency: extra orders must lie in [1, n]");
    }
  }

  NspConsistencyReport rep;

  auto check_certified = [&](const ModularFrame& f, std::uint64_t run_seed,
                             const std::string& what) {
    const int s_cert = certified_order(sparsity_bound(f), f.n());
    if (s_cert < 1) return;
    ++rep.certified_order_checks;
    const auto w = nsp_falsify(f, s_cert, cfg.num_samples, run_seed);
    if (w) {
      throw FatalInconsistencyError(
          what + ": falsifier found a witness at certified order " +
          std::to_string(s_cert) + " (lhs " + std::to_string(w->lhs) + ", rhs " +
          std::to_string(w->rhs) + ")");
    }
  };

  auto probe = [&](const ModularFrame& f, int order, std::uint64_t run_seed,
                   const std::string& what, int& witnesses, int& verified) {
    ++rep.probe_checks;
    const auto w = nsp_falsify(f, order, cfg.num_samples, run_seed);
    if (!w) return;
    if (nsp_coherence_certificate(f, order)) {
      throw FatalInconsistencyError(what + ": witness at certified order " +
                                    std::to_string(order));
    }
    ++witnesses;
    try {
      nonuniqueness_witness(f, *w);
      ++verified;
    } catch (const InvalidInputError&) {
      // Counted as found-but-unverified; the report exposes the gap.
    }
  };

  for (int i = 0; i < cfg.frames; ++i) {
    const ModularFrame f = random_unit_frame(
        cfg.k, cfg.m, cfg.n, mix_seed(cfg.seed, kNspFrameTag, static_cast<std::uint64_t>(i)));
    ++rep.frames_checked;
    const std::uint64_t run_seed = mix_seed(cfg.seed, kNspRunTag, static_cast<std::uint64_t>(i));
    const std::string what = "random frame " + std::to_string(i);
    check_certified(f, run_seed, what);
    const int s_cert = certified_order(sparsity_bound(f), f.n());
    for (int o : cfg.extra_orders) {
      if (o <= s_cert) continue;  // already covered by the certified check
      probe(f, o, run_seed, what, rep.probe_witnesses, rep.probe_verified);
    }
  }

  for (int i = 0; i < cfg.degenerate_frames; ++i) {
    const std::uint64_t gen_seed = mix_seed(cfg.seed, kDegenTag, static_cast<std::uint64_t>(i));
    const std::uint64_t run_seed =
        mix_seed(cfg.seed, kDegenTag + 1, static_cast<std::uint64_t>(i));
    const int k = cfg.k, m = cfg.m;
    ModularFrame f = [&] {
      if (i % 2 == 0) {
        // Duplicated vector: tau_0 appears twice, kernel is the pairing
        // subspace, equality witnesses exist at order 1.
        const ModularFrame base = random_unit_frame(k, m, m, gen_seed);
        std::vector<ModuleVector> vecs;
        vecs.reserve(static_cast<std::size_t>(m + 1));
        vecs.push_back(base.vec(0));
        for (int j = 0; j < m; ++j) vecs.push_back(base.vec(j));
        return ModularFrame(k, m, std::move(vecs));
      }
      // Near-duplicated: coherence cos(eps) < 1 still certifies order 1;
      // the kernel is nontrivial but carries no order-1 violation.
      Rng rng(gen_seed);
      const Mat u = haar_unitary(m * k, rng);
      const double eps = 1e-3;
      std::vector<ModuleVector> vecs;
      vecs.reserve(static_cast<std::size_t>(m + 1));
      const ModuleVector w0 = vec_from_rows(u, k, m, 0);
      const ModuleVector w1 = vec_from_rows(u, k, m, 1);
      ModuleVector tilted = w0;
      tilted *= Cplx(std::cos(eps), 0.0);
      ModuleVector part = w1;
      part *= Cplx(std::sin(eps), 0.0);
      tilted += part;
      vecs.push_back(w0);
      vecs.push_back(std::move(tilted));
      for (int b = 1; b < m; ++b) vecs.push_back(vec_from_rows(u, k, m, b));
      return ModularFrame(k, m, std::move(vecs));
    }();

    ++rep.degenerate_checked;
    const std::string what = "degenerate frame " + std::to_string(i);
    check_certified(f, run_seed, what);
    const int s_cert = certified_order(sparsity_bound(f), f.n());
    const int probe_order = std::min(s_cert + 1, f.n());
    if (probe_order > s_cert) {
      ++rep.probe_checks;
      const auto w = nsp_falsify(f, probe_order, cfg.num_samples, run_seed);
      if (w) {
        ++rep.degenerate_witnesses;
        try {
          nonuniqueness_witness(f, *w);
          ++rep.degenerate_verified;
        } catch (const InvalidInputError&) {
        }
      }
    }
  }

  return rep;
}

}  // namespace ncsr
