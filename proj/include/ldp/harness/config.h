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

#ifndef LDP_HARNESS_CONFIG_H_
#define LDP_HARNESS_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/random.h"
#include "ldp/data_io/dataset.h"
#include "ldp/data_io/loaders.h"

namespace ldp {

using KeyValues = std::map<std::string, std::string>;

// Parses `key = value` lines. Blank lines and lines starting with '#' are
// skipped; keys are case-sensitive and must not repeat.
absl::StatusOr<KeyValues> ParseKeyValues(const std::string& text);
// NotFound when the file cannot be read.
absl::StatusOr<KeyValues> ReadKeyValueFile(const std::string& path);

absl::StatusOr<std::vector<double>> ParseDoubleList(const std::string& text);

// Alphabet specs:
//   range:LO:HI                       integers LO..HI
//   labels:a,b,c                      categorical
//   grid:COLS:ROWS:WIDTH              planar grid, first center (W/2, W/2)
absl::StatusOr<Alphabet> ParseAlphabetSpec(const std::string& spec);

// Builds a mechanism by name (the names of MechanismKind) on an alphabet.
// truncated_geometric needs a contiguous integer range; geometric_planar
// uses the input grid as output grid.
absl::StatusOr<Mechanism> BuildMechanismByName(const std::string& name,
                                               const Alphabet& alphabet,
                                               double eps);

enum class Estimator { kIbu, kInvN, kInvP, kRapporDecode };
std::string EstimatorName(Estimator e);
absl::StatusOr<Estimator> ParseEstimator(const std::string& name);

enum class Metric { kEmd, kTv, kL2sq };
std::string MetricName(Metric m);
absl::StatusOr<Metric> ParseMetric(const std::string& name);

struct DatasetSpec {
  // ages_csv, checkins_csv, binomial, uniform, ages_like, explicit.
  std::string kind;
  std::string path;
  std::string column = "age";
  std::optional<BoundingBox> bbox;
  double cell_width_km = 0.5;
  int binomial_k = 10;
  double binomial_p = 0.5;
  std::vector<std::int64_t> uniform_values;
  std::vector<double> weights;
  std::optional<std::string> alphabet;
  std::int64_t n = 0;
};

struct ExperimentConfig {
  DatasetSpec dataset;
  std::string mechanism;
  std::vector<double> eps;
  std::vector<Estimator> estimators;
  std::vector<Metric> metrics = {Metric::kEmd};
  int replications = 1;
  std::uint64_t master_seed = 1;
  std::string out;
  std::string summary_out;
  double ibu_delta = 1e-10;
  int ibu_max_iter = 100000;
  bool likely_subset = false;
  bool rappor_project = false;
  bool record_runtime = true;
  int threads = 1;
};

// Every key of the documented schema; unknown keys are rejected.
absl::StatusOr<ExperimentConfig> ExperimentConfigFromKeyValues(
    const KeyValues& kv);

// InvalidArgument when an estimator cannot run on the mechanism family.
absl::Status ValidateExperimentConfig(const ExperimentConfig& config);

// Loads or samples the dataset. Synthetic data use their own stream derived
// from the master seed, separate from every replication stream.
absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec,
                                    std::uint64_t master_seed);

// Stream index reserved for synthetic dataset generation.
inline constexpr std::uint64_t kDatasetStreamIndex = ~std::uint64_t{0};

}  // namespace ldp

#endif  // LDP_HARNESS_CONFIG_H_
