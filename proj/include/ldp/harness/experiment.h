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

#ifndef LDP_HARNESS_EXPERIMENT_H_
#define LDP_HARNESS_EXPERIMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"
#include "ldp/data_io/dataset.h"
#include "ldp/estimators/ibu.h"
#include "ldp/harness/config.h"
#include "ldp/reduction/likely_subset.h"

namespace ldp {

// Share of failed (eps, estimator, replication) runs above which an
// experiment is aborted.
inline constexpr double kMaxFailureRate = 0.10;

struct EstimatorOptions {
  IbuOptions ibu;
  bool likely_subset = false;
  bool rappor_project = false;
};

struct EstimateOutcome {
  Distribution estimate;
  std::optional<IbuResult> ibu;
  std::optional<LikelySubset> subset;
  // Unprojected inversion estimate, for inv-n and inv-p.
  std::optional<std::vector<double>> raw;
};

// The likely-subset construction that applies to the mechanism: observed
// values for k-RR, the interval for distance-monotone linear mechanisms, the
// hull neighbourhood for distance-monotone planar ones.
// IncompatibleEstimator when none applies.
absl::StatusOr<LikelySubset> LikelySubsetFor(const Mechanism& mech,
                                             const ObservationSet& obs);

// IncompatibleEstimator when the estimator does not fit the mechanism.
absl::StatusOr<EstimateOutcome> RunEstimator(const Mechanism& mech,
                                             const ObservationSet& obs,
                                             Estimator estimator,
                                             const EstimatorOptions& options);

absl::StatusOr<double> ComputeMetric(Metric metric,
                                     const Distribution& estimate,
                                     const Distribution& truth);

struct ExperimentRow {
  std::string mechanism;
  double eps = 0.0;
  std::string estimator;
  int replication = 0;
  std::string metric;
  double value = 0.0;
  double runtime_ms = 0.0;
  // "ok", "max_iter" (IBU stopped at the iteration cap), or the error code
  // of a failed run, whose value is NaN.
  std::string status;
};

struct SummaryRow {
  std::string mechanism;
  double eps = 0.0;
  std::string estimator;
  std::string metric;
  int count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<SummaryRow> summary;
  int runs = 0;
  int failures = 0;
};

// Replication r obfuscates the dataset with the stream DeriveStream(seed, r)
// once per eps and feeds the same reports to every estimator. Rows are
// ordered by (eps, estimator, replication, metric) whatever the thread
// count. Aborted (EstimatorFailureThreshold) when more than 10% of the runs
// fail.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const Dataset& data);
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config);

// Linear interpolation between order statistics; `sorted` must be non-empty
// and ascending.
double Quantile(const std::vector<double>& sorted, double q);

// Median of a summary cell, or NaN when the cell is missing.
double SummaryMedian(const ExperimentResult& result, double eps,
                     const std::string& estimator, const std::string& metric);

// Header: mechanism,eps,estimator,replication,metric,value,runtime_ms,status
std::string ExperimentCsv(const std::vector<ExperimentRow>& rows);
// Header: mechanism,eps,estimator,metric,count,min,q1,median,q3,max
std::string SummaryCsv(const std::vector<SummaryRow>& rows);

}  // namespace ldp

#endif  // LDP_HARNESS_EXPERIMENT_H_
