// Copyright 2026 The ldp-ibu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: build mechanisms, obfuscate datasets, estimate
// distributions, run replicated experiments, and analyze mechanisms.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ldp/harness/commands.h"

namespace {

int Report(const ldp::CommandResult& result) {
  if (result.exit_code == ldp::kExitOk) {
    std::cout << result.message << "\n";
  } else {
    std::cerr << "error: " << result.message << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local differential privacy: mechanisms and estimators"};
  app.require_subcommand(1);

  ldp::BuildMechanismOptions build;
  auto* build_cmd = app.add_subcommand("mechanism", "Write a mechanism file");
  build_cmd->add_option("--name", build.mechanism, "Mechanism name")
      ->required();
  build_cmd
      ->add_option("--alphabet", build.alphabet,
                   "range:LO:HI, labels:a,b,... or grid:COLS:ROWS:WIDTH")
      ->required();
  build_cmd->add_option("--eps", build.eps, "Privacy parameter");
  build_cmd->add_option("--out", build.out, "Output JSON path")->required();

  ldp::ObfuscateOptions obf;
  std::optional<std::uint64_t> obf_seed;
  std::optional<double> obf_eps;
  std::optional<std::string> obf_out;
  std::optional<std::string> obf_mech_out;
  auto* obf_cmd = app.add_subcommand("obfuscate", "Obfuscate a dataset");
  obf_cmd->add_option("--config", obf.config_path, "Config file")->required();
  obf_cmd->add_option("--seed", obf_seed, "Master seed override");
  obf_cmd->add_option("--eps", obf_eps, "Privacy parameter override");
  obf_cmd->add_option("--out", obf_out, "Observations JSON path");
  obf_cmd->add_option("--mechanism-out", obf_mech_out,
                      "Also write the mechanism JSON here");

  ldp::EstimateOptions est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate a distribution");
  est_cmd->add_option("--mechanism", est.mechanism_path, "Mechanism JSON")
      ->required();
  est_cmd->add_option("--observations", est.observations_path,
                      "Observations JSON")
      ->required();
  est_cmd->add_option("--estimator", est.estimator,
                      "ibu, inv-n, inv-p or rappor-decode");
  est_cmd->add_flag("--likely-subset", est.likely_subset,
                    "Run IBU on the likely subset and lift");
  est_cmd->add_option("--delta", est.delta, "IBU stopping threshold");
  est_cmd->add_option("--max-iter", est.max_iter, "IBU iteration cap");
  est_cmd->add_flag("--rappor-project", est.rappor_project,
                    "Project RAPPOR decodes onto the simplex");
  est_cmd->add_option("--out", est.out, "Output JSON path")->required();

  ldp::ExperimentOptions exp;
  std::optional<std::uint64_t> exp_seed;
  std::optional<std::string> exp_out;
  std::optional<std::string> exp_eps;
  std::optional<int> exp_reps;
  std::optional<int> exp_threads;
  auto* exp_cmd = app.add_subcommand("experiment", "Run an eps sweep");
  exp_cmd->add_option("--config", exp.config_path, "Config file")->required();
  exp_cmd->add_option("--seed", exp_seed, "Master seed override");
  exp_cmd->add_option("--out", exp_out, "CSV output path");
  exp_cmd->add_option("--eps", exp_eps, "Comma-separated eps grid");
  exp_cmd->add_option("--replications", exp_reps, "Replication count");
  exp_cmd->add_option("--threads", exp_threads, "Worker threads");
  exp_cmd->add_flag("--no-runtime", exp.no_runtime,
                    "Write 0 runtimes so outputs are byte-reproducible");

  ldp::AnalyzeOptions ana;
  std::optional<std::string> ana_obs;
  std::optional<std::int64_t> ana_n;
  std::optional<std::string> ana_out;
  auto* ana_cmd = app.add_subcommand("analyze", "Concavity and bounds report");
  ana_cmd->add_option("--mechanism", ana.mechanism_path, "Mechanism JSON")
      ->required();
  ana_cmd->add_option("--observations", ana_obs, "Observations JSON");
  ana_cmd->add_option("--n", ana_n, "Sample size for the bounds");
  ana_cmd->add_option("--out", ana_out, "Report JSON path");

  ldp::ReduceOptions red;
  std::optional<std::string> red_out;
  auto* red_cmd = app.add_subcommand("reduce", "Likely-subset construction");
  red_cmd->add_option("--mechanism", red.mechanism_path, "Mechanism JSON")
      ->required();
  red_cmd->add_option("--observations", red.observations_path,
                      "Observations JSON")
      ->required();
  red_cmd->add_option("--out", red_out, "Subset JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ldp::kExitConfig;
  }

  if (*build_cmd) return Report(ldp::CmdBuildMechanism(build));
  if (*obf_cmd) {
    obf.seed = obf_seed;
    obf.eps = obf_eps;
    obf.out = obf_out;
    obf.mechanism_out = obf_mech_out;
    return Report(ldp::CmdObfuscate(obf));
  }
  if (*est_cmd) return Report(ldp::CmdEstimate(est));
  if (*exp_cmd) {
    exp.seed = exp_seed;
    exp.out = exp_out;
    exp.eps = exp_eps;
    exp.replications = exp_reps;
    exp.threads = exp_threads;
    return Report(ldp::CmdExperiment(exp));
  }
  if (*ana_cmd) {
    ana.observations_path = ana_obs;
    ana.n = ana_n;
    ana.out = ana_out;
    return Report(ldp::CmdAnalyze(ana));
  }
  if (*red_cmd) {
    red.out = red_out;
    return Report(ldp::CmdReduce(red));
  }
  return ldp::kExitConfig;
}
