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

#ifndef LDP_HARNESS_COMMANDS_H_
#define LDP_HARNESS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "absl/status/status.h"

namespace ldp {

enum ExitCode : int {
  kExitOk = 0,
  kExitEstimatorFailure = 1,
  kExitIo = 2,
  kExitConfig = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  // Human-readable output for stdout on success, the error on failure.
  std::string message;
};

// Exit code for a failed status: NotFound, PermissionDenied and DataLoss are
// I/O failures, "ConfigError:" and "IncompatibleEstimator:" messages are
// configuration failures, everything else is `fallback`.
int ExitCodeFor(const absl::Status& status, int fallback);

struct BuildMechanismOptions {
  std::string mechanism;
  std::string alphabet;
  double eps = 0.0;
  std::string out;
};
CommandResult CmdBuildMechanism(const BuildMechanismOptions& options);

struct ObfuscateOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<std::string> out;
  // Also writes the mechanism used, for later `estimate` and `analyze` runs.
  std::optional<std::string> mechanism_out;
};
CommandResult CmdObfuscate(const ObfuscateOptions& options);

struct EstimateOptions {
  std::string mechanism_path;
  std::string observations_path;
  std::string estimator = "ibu";
  bool likely_subset = false;
  double delta = 1e-10;
  int max_iter = 100000;
  bool rappor_project = false;
  std::string out;
};
CommandResult CmdEstimate(const EstimateOptions& options);

struct ExperimentOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> eps;
  std::optional<int> replications;
  std::optional<int> threads;
  bool no_runtime = false;
};
CommandResult CmdExperiment(const ExperimentOptions& options);

struct AnalyzeOptions {
  std::string mechanism_path;
  std::optional<std::string> observations_path;
  // Sample size for the error bounds; defaults to the observation count, or
  // 1 without observations.
  std::optional<std::int64_t> n;
  std::optional<std::string> out;
};
CommandResult CmdAnalyze(const AnalyzeOptions& options);

struct ReduceOptions {
  std::string mechanism_path;
  std::string observations_path;
  std::optional<std::string> out;
};
CommandResult CmdReduce(const ReduceOptions& options);

}  // namespace ldp

#endif  // LDP_HARNESS_COMMANDS_H_
