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

#include "ldp/harness/commands.h"

#include <cmath>
#include <fstream>
#include <numbers>

#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "ldp/analysis/bounds.h"
#include "ldp/analysis/concavity.h"
#include "ldp/core/json_io.h"
#include "ldp/core/obs_matrix.h"
#include "ldp/harness/config.h"
#include "ldp/harness/experiment.h"
#include "ldp/mechanisms/mechanisms.h"

namespace ldp {
namespace {

using nlohmann::json;

CommandResult Fail(const absl::Status& status, int fallback) {
  return {ExitCodeFor(status, fallback), std::string(status.message())};
}

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out << text;
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

absl::StatusOr<Mechanism> LoadMechanism(const std::string& path) {
  absl::StatusOr<json> j = ReadJsonFile(path);
  if (!j.ok()) return j.status();
  absl::StatusOr<Mechanism> mech = MechanismFromJson(*j);
  if (!mech.ok()) {
    return absl::DataLossError(
        absl::StrCat("invalid mechanism file ", path, ": ",
                     mech.status().message()));
  }
  return mech;
}

absl::StatusOr<ObservationSet> LoadObservations(const std::string& path) {
  absl::StatusOr<json> j = ReadJsonFile(path);
  if (!j.ok()) return j.status();
  absl::StatusOr<ObservationSet> obs = ObservationsFromJson(*j);
  if (!obs.ok()) {
    return absl::DataLossError(
        absl::StrCat("invalid observations file ", path, ": ",
                     obs.status().message()));
  }
  return obs;
}

absl::StatusOr<ExperimentConfig> LoadConfig(const std::string& path) {
  absl::StatusOr<KeyValues> kv = ReadKeyValueFile(path);
  if (!kv.ok()) return kv.status();
  return ExperimentConfigFromKeyValues(*kv);
}

std::string SummaryPathFor(const std::string& out) {
  if (absl::EndsWith(out, ".csv")) {
    return absl::StrCat(out.substr(0, out.size() - 4), "_summary.csv");
  }
  return absl::StrCat(out, ".summary.csv");
}

}  // namespace

int ExitCodeFor(const absl::Status& status, int fallback) {
  if (status.ok()) return kExitOk;
  switch (status.code()) {
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kDataLoss:
      return kExitIo;
    default:
      break;
  }
  if (absl::StartsWith(status.message(), "ConfigError") ||
      absl::StartsWith(status.message(), "IncompatibleEstimator")) {
    return kExitConfig;
  }
  return fallback;
}

CommandResult CmdBuildMechanism(const BuildMechanismOptions& options) {
  absl::StatusOr<Alphabet> alphabet = ParseAlphabetSpec(options.alphabet);
  if (!alphabet.ok()) return Fail(alphabet.status(), kExitConfig);
  absl::StatusOr<Mechanism> mech =
      BuildMechanismByName(options.mechanism, *alphabet, options.eps);
  if (!mech.ok()) return Fail(mech.status(), kExitConfig);
  if (absl::Status s = WriteJsonFile(options.out, MechanismToJson(*mech));
      !s.ok()) {
    return Fail(s, kExitIo);
  }
  return {kExitOk, absl::StrCat("wrote ", options.out)};
}

CommandResult CmdObfuscate(const ObfuscateOptions& options) {
  absl::StatusOr<ExperimentConfig> config = LoadConfig(options.config_path);
  if (!config.ok()) return Fail(config.status(), kExitConfig);
  const std::uint64_t seed = options.seed.value_or(config->master_seed);
  const double eps = options.eps.value_or(config->eps.front());
  const std::string out = options.out.value_or(config->out);
  if (out.empty()) {
    return {kExitConfig, "ConfigError: no output path (set out or --out)"};
  }
  absl::StatusOr<Dataset> data = LoadDataset(config->dataset, seed);
  if (!data.ok()) return Fail(data.status(), kExitConfig);
  absl::StatusOr<Mechanism> mech =
      BuildMechanismByName(config->mechanism, data->alphabet, eps);
  if (!mech.ok()) return Fail(mech.status(), kExitConfig);
  Rng rng = DeriveStream(seed, 0);
  const ObservationSet obs = ObfuscateIndices(*mech, data->indices, rng);
  if (absl::Status s = WriteJsonFile(out, ObservationsToJson(obs)); !s.ok()) {
    return Fail(s, kExitIo);
  }
  if (options.mechanism_out) {
    if (absl::Status s =
            WriteJsonFile(*options.mechanism_out, MechanismToJson(*mech));
        !s.ok()) {
      return Fail(s, kExitIo);
    }
  }
  return {kExitOk, absl::StrCat("wrote ", obs.n(), " reports to ", out)};
}

CommandResult CmdEstimate(const EstimateOptions& options) {
  absl::StatusOr<Mechanism> mech = LoadMechanism(options.mechanism_path);
  if (!mech.ok()) return Fail(mech.status(), kExitIo);
  absl::StatusOr<ObservationSet> obs =
      LoadObservations(options.observations_path);
  if (!obs.ok()) return Fail(obs.status(), kExitIo);
  absl::StatusOr<Estimator> estimator = ParseEstimator(options.estimator);
  if (!estimator.ok()) return Fail(estimator.status(), kExitConfig);

  EstimatorOptions est;
  est.ibu.delta = options.delta;
  est.ibu.max_iter = options.max_iter;
  est.ibu.record_trace = false;
  est.likely_subset = options.likely_subset;
  est.rappor_project = options.rappor_project;
  absl::StatusOr<EstimateOutcome> outcome =
      RunEstimator(*mech, *obs, *estimator, est);
  if (!outcome.ok()) return Fail(outcome.status(), kExitEstimatorFailure);

  json j = {{"estimator", options.estimator},
            {"estimate", DistributionToJson(outcome->estimate)}};
  if (outcome->ibu) j["ibu"] = IbuResultToJson(*outcome->ibu);
  if (outcome->subset) j["likely_subset"] = LikelySubsetToJson(*outcome->subset);
  if (outcome->raw) j["raw"] = *outcome->raw;
  if (absl::Status s = WriteJsonFile(options.out, j); !s.ok()) {
    return Fail(s, kExitIo);
  }
  return {kExitOk, absl::StrCat("wrote ", options.out)};
}

CommandResult CmdExperiment(const ExperimentOptions& options) {
  absl::StatusOr<ExperimentConfig> config = LoadConfig(options.config_path);
  if (!config.ok()) return Fail(config.status(), kExitConfig);
  if (options.seed) config->master_seed = *options.seed;
  if (options.out) config->out = *options.out;
  if (options.eps) {
    absl::StatusOr<std::vector<double>> eps = ParseDoubleList(*options.eps);
    if (!eps.ok()) return Fail(eps.status(), kExitConfig);
    config->eps = *eps;
  }
  if (options.replications) config->replications = *options.replications;
  if (options.threads) config->threads = *options.threads;
  if (options.no_runtime) config->record_runtime = false;
  if (config->out.empty()) {
    return {kExitConfig, "ConfigError: no output path (set out or --out)"};
  }
  if (absl::Status s = ValidateExperimentConfig(*config); !s.ok()) {
    return Fail(s, kExitConfig);
  }
  absl::StatusOr<ExperimentResult> result = RunExperiment(*config);
  if (!result.ok()) return Fail(result.status(), kExitEstimatorFailure);
  const std::string summary_path = config->summary_out.empty()
                                       ? SummaryPathFor(config->out)
                                       : config->summary_out;
  if (absl::Status s = WriteText(config->out, ExperimentCsv(result->rows));
      !s.ok()) {
    return Fail(s, kExitIo);
  }
  if (absl::Status s = WriteText(summary_path, SummaryCsv(result->summary));
      !s.ok()) {
    return Fail(s, kExitIo);
  }
  return {kExitOk,
          absl::StrCat("wrote ", result->rows.size(), " rows to ", config->out,
                       " and the summary to ", summary_path, " (",
                       result->failures, " failed runs)")};
}

CommandResult CmdAnalyze(const AnalyzeOptions& options) {
  absl::StatusOr<Mechanism> mech = LoadMechanism(options.mechanism_path);
  if (!mech.ok()) return Fail(mech.status(), kExitIo);
  std::optional<ObservationSet> obs;
  if (options.observations_path) {
    absl::StatusOr<ObservationSet> loaded =
        LoadObservations(*options.observations_path);
    if (!loaded.ok()) return Fail(loaded.status(), kExitIo);
    obs = *std::move(loaded);
  }
  const std::int64_t n = options.n.value_or(obs ? obs->n() : 1);
  const int k = static_cast<int>(mech->input().size());
  const double eps = mech->epsilon();

  json report = {{"mechanism", std::string(MechanismKindName(mech->kind()))},
                 {"epsilon", eps},
                 {"input_size", k},
                 {"n", n}};
  report["identification"] =
      mech->is_finite() ? json(IdentificationCheck(*mech)) : json(nullptr);
  if (obs) {
    absl::StatusOr<ObsMatrix> g = ObsMatrix::Build(*mech, *obs);
    if (!g.ok()) return Fail(g.status(), kExitEstimatorFailure);
    const ConcavityReport concavity = StrictConcavityCheck(*g);
    report["concavity"] = ConcavityReportToJson(concavity);
    report["verdict"] = concavity.strictly_concave ? "strictly concave"
                                                   : "not strictly concave";
  } else {
    report["concavity"] = nullptr;
    report["verdict"] = nullptr;
  }
  json bounds = json::object();
  switch (mech->kind()) {
    case MechanismKind::kKrr:
      if (auto b = InvKrrErrorBound(k, eps, n); b.ok()) {
        bounds["inv_krr_error_bound"] = *b;
      }
      break;
    case MechanismKind::kGeometricLinear:
    case MechanismKind::kTruncatedGeometric:
      if (auto b = InvGeometricErrorLowerBound(eps, n); b.ok()) {
        bounds["inv_geometric_error_lower_bound"] = *b;
      }
      break;
    case MechanismKind::kRappor:
      if (auto b = RapporConcavityProbBound(k, eps, n); b.ok()) {
        bounds["rappor_concavity_prob_bound"] = *b;
      }
      break;
    default:
      break;
  }
  report["bounds"] = std::move(bounds);
  if (options.out) {
    if (absl::Status s = WriteJsonFile(*options.out, report); !s.ok()) {
      return Fail(s, kExitIo);
    }
  }
  return {kExitOk, report.dump(2)};
}

CommandResult CmdReduce(const ReduceOptions& options) {
  absl::StatusOr<Mechanism> mech = LoadMechanism(options.mechanism_path);
  if (!mech.ok()) return Fail(mech.status(), kExitIo);
  absl::StatusOr<ObservationSet> obs =
      LoadObservations(options.observations_path);
  if (!obs.ok()) return Fail(obs.status(), kExitIo);
  absl::StatusOr<LikelySubset> subset = LikelySubsetFor(*mech, *obs);
  if (!subset.ok()) return Fail(subset.status(), kExitEstimatorFailure);
  const json j = LikelySubsetToJson(*subset);
  if (options.out) {
    if (absl::Status s = WriteJsonFile(*options.out, j); !s.ok()) {
      return Fail(s, kExitIo);
    }
  }
  return {kExitOk, j.dump(2)};
}

}  // namespace ldp
