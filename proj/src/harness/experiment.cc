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

#include "ldp/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ldp/core/obs_matrix.h"
#include "ldp/estimators/inversion.h"
#include "ldp/estimators/rappor_decode.h"
#include "ldp/mechanisms/mechanisms.h"
#include "ldp/metrics/distances.h"
#include "ldp/metrics/emd.h"

namespace ldp {
namespace {

absl::Status Incompatible(absl::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("IncompatibleEstimator: ", message));
}

std::string ErrorCode(const absl::Status& status) {
  const absl::string_view message = status.message();
  const auto colon = message.find(':');
  if (colon != absl::string_view::npos && colon > 0 &&
      message.substr(0, colon).find(' ') == absl::string_view::npos) {
    return std::string(message.substr(0, colon));
  }
  return std::string(absl::StatusCodeToString(status.code()));
}

// One replication's outcome for one estimator.
struct RunRecord {
  std::string status;
  std::vector<double> values;
  double runtime_ms = 0.0;
};

}  // namespace

absl::StatusOr<LikelySubset> LikelySubsetFor(const Mechanism& mech,
                                             const ObservationSet& obs) {
  if (mech.kind() == MechanismKind::kKrr) {
    return LikelyKrr(mech.input(), obs);
  }
  if (IsDistanceMonotone(mech.kind())) {
    if (mech.input().kind() == Alphabet::Kind::kLinear) {
      return LikelyLinear(mech.input(), obs);
    }
    if (mech.input().kind() == Alphabet::Kind::kPlanar) {
      return LikelyPlanar(mech.input(), obs);
    }
  }
  return Incompatible(absl::StrCat("no likely-subset construction for ",
                                   MechanismKindName(mech.kind())));
}

absl::StatusOr<EstimateOutcome> RunEstimator(const Mechanism& mech,
                                             const ObservationSet& obs,
                                             Estimator estimator,
                                             const EstimatorOptions& options) {
  switch (estimator) {
    case Estimator::kIbu: {
      if (options.likely_subset) {
        absl::StatusOr<LikelySubset> subset = LikelySubsetFor(mech, obs);
        if (!subset.ok()) return subset.status();
        absl::StatusOr<LiftedEstimate> lifted =
            RestrictAndLift(mech, obs, *subset, options.ibu);
        if (!lifted.ok()) return lifted.status();
        return EstimateOutcome{.estimate = lifted->estimate,
                               .ibu = lifted->restricted,
                               .subset = *std::move(subset)};
      }
      absl::StatusOr<ObsMatrix> g = ObsMatrix::Build(mech, obs);
      if (!g.ok()) return g.status();
      absl::StatusOr<IbuResult> result = Ibu(*g, options.ibu);
      if (!result.ok()) return result.status();
      return EstimateOutcome{.estimate = result->estimate,
                             .ibu = *std::move(result)};
    }
    case Estimator::kInvN:
    case Estimator::kInvP: {
      if (!mech.is_finite() ||
          mech.matrix().rows() != mech.matrix().cols()) {
        return Incompatible(absl::StrCat(
            EstimatorName(estimator),
            " needs a square finite mechanism, got ",
            MechanismKindName(mech.kind())));
      }
      absl::StatusOr<Empirical> q = ToEmpirical(obs);
      if (!q.ok()) return q.status();
      absl::StatusOr<std::vector<double>> raw = InvRaw(*q, mech);
      if (!raw.ok()) return raw.status();
      absl::StatusOr<Distribution> estimate =
          estimator == Estimator::kInvN ? InvNormalize(*raw, mech.input())
                                        : InvProject(*raw, mech.input());
      if (!estimate.ok()) return estimate.status();
      return EstimateOutcome{.estimate = *std::move(estimate),
                             .raw = *std::move(raw)};
    }
    case Estimator::kRapporDecode: {
      if (mech.kind() != MechanismKind::kRappor) {
        return Incompatible("rappor-decode needs RAPPOR reports");
      }
      absl::StatusOr<std::vector<std::int64_t>> counts =
          RapporBitCounts(obs, mech.bit_length());
      if (!counts.ok()) return counts.status();
      absl::StatusOr<Distribution> estimate = RapporDecode(
          *counts, obs.n(), mech.epsilon(),
          options.rappor_project ? PostProcess::kProject
                                 : PostProcess::kNormalize,
          mech.input());
      if (!estimate.ok()) return estimate.status();
      return EstimateOutcome{.estimate = *std::move(estimate)};
    }
  }
  return absl::InternalError("unknown estimator");
}

absl::StatusOr<double> ComputeMetric(Metric metric,
                                     const Distribution& estimate,
                                     const Distribution& truth) {
  switch (metric) {
    case Metric::kEmd:
      return Emd(estimate, truth);
    case Metric::kTv:
      return TotalVariation(estimate, truth);
    case Metric::kL2sq:
      return SquaredError(estimate.probs(), truth);
  }
  return absl::InternalError("unknown metric");
}

double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const Dataset& data) {
  if (absl::Status s = ValidateExperimentConfig(config); !s.ok()) return s;
  absl::StatusOr<Distribution> truth = EmpiricalDistribution(data);
  if (!truth.ok()) return truth.status();

  std::vector<Mechanism> mechanisms;
  for (double eps : config.eps) {
    absl::StatusOr<Mechanism> mech =
        BuildMechanismByName(config.mechanism, data.alphabet, eps);
    if (!mech.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("ConfigError: ", mech.status().message()));
    }
    mechanisms.push_back(*std::move(mech));
  }

  EstimatorOptions options;
  options.ibu.delta = config.ibu_delta;
  options.ibu.max_iter = config.ibu_max_iter;
  options.ibu.record_trace = false;
  options.likely_subset = config.likely_subset;
  options.rappor_project = config.rappor_project;

  const std::size_t n_eps = config.eps.size();
  const std::size_t n_est = config.estimators.size();
  const std::size_t n_rep = static_cast<std::size_t>(config.replications);
  const std::size_t tasks = n_eps * n_rep;
  // records[(task * n_est) + estimator], task = eps_index * n_rep + r.
  std::vector<RunRecord> records(tasks * n_est);

  auto run_task = [&](std::size_t task) {
    const std::size_t e = task / n_rep;
    const std::size_t r = task % n_rep;
    Rng rng = DeriveStream(config.master_seed, r);
    const ObservationSet obs = ObfuscateIndices(mechanisms[e], data.indices,
                                                rng);
    for (std::size_t k = 0; k < n_est; ++k) {
      RunRecord& rec = records[task * n_est + k];
      const auto start = std::chrono::steady_clock::now();
      absl::StatusOr<EstimateOutcome> outcome =
          RunEstimator(mechanisms[e], obs, config.estimators[k], options);
      const auto stop = std::chrono::steady_clock::now();
      rec.runtime_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      if (!outcome.ok()) {
        rec.status = ErrorCode(outcome.status());
        continue;
      }
      rec.status =
          outcome->ibu && !outcome->ibu->converged ? "max_iter" : "ok";
      for (Metric m : config.metrics) {
        absl::StatusOr<double> v = ComputeMetric(m, outcome->estimate, *truth);
        if (!v.ok()) {
          rec.status = ErrorCode(v.status());
          rec.values.clear();
          break;
        }
        rec.values.push_back(*v);
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.threads), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) run_task(t);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  ExperimentResult result;
  result.runs = static_cast<int>(records.size());
  for (const RunRecord& rec : records) {
    if (rec.values.size() != config.metrics.size()) ++result.failures;
  }
  if (static_cast<double>(result.failures) >
      kMaxFailureRate * static_cast<double>(result.runs)) {
    std::string first_error;
    for (const RunRecord& rec : records) {
      if (rec.values.size() != config.metrics.size()) {
        first_error = rec.status;
        break;
      }
    }
    return absl::AbortedError(absl::StrCat(
        "EstimatorFailureThreshold: ", result.failures, " of ", result.runs,
        " runs failed (first error: ", first_error, ")"));
  }

  const std::string mech_name = config.mechanism;
  for (std::size_t e = 0; e < n_eps; ++e) {
    for (std::size_t k = 0; k < n_est; ++k) {
      const std::string est_name = EstimatorName(config.estimators[k]);
      std::vector<std::vector<double>> cell(config.metrics.size());
      for (std::size_t r = 0; r < n_rep; ++r) {
        const RunRecord& rec = records[(e * n_rep + r) * n_est + k];
        const bool failed = rec.values.size() != config.metrics.size();
        for (std::size_t m = 0; m < config.metrics.size(); ++m) {
          const double value = failed
                                   ? std::numeric_limits<double>::quiet_NaN()
                                   : rec.values[m];
          if (!failed) cell[m].push_back(value);
          result.rows.push_back(ExperimentRow{
              .mechanism = mech_name,
              .eps = config.eps[e],
              .estimator = est_name,
              .replication = static_cast<int>(r),
              .metric = MetricName(config.metrics[m]),
              .value = value,
              .runtime_ms = config.record_runtime ? rec.runtime_ms : 0.0,
              .status = rec.status});
        }
      }
      for (std::size_t m = 0; m < config.metrics.size(); ++m) {
        std::vector<double>& values = cell[m];
        SummaryRow row{.mechanism = mech_name,
                       .eps = config.eps[e],
                       .estimator = est_name,
                       .metric = MetricName(config.metrics[m]),
                       .count = static_cast<int>(values.size())};
        if (!values.empty()) {
          std::sort(values.begin(), values.end());
          row.min = values.front();
          row.q1 = Quantile(values, 0.25);
          row.median = Quantile(values, 0.5);
          row.q3 = Quantile(values, 0.75);
          row.max = values.back();
        } else {
          row.min = row.q1 = row.median = row.q3 = row.max =
              std::numeric_limits<double>::quiet_NaN();
        }
        result.summary.push_back(row);
      }
    }
  }
  return result;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config) {
  absl::StatusOr<Dataset> data = LoadDataset(config.dataset, config.master_seed);
  if (!data.ok()) return data.status();
  return RunExperiment(config, *data);
}

double SummaryMedian(const ExperimentResult& result, double eps,
                     const std::string& estimator, const std::string& metric) {
  for (const SummaryRow& row : result.summary) {
    if (row.eps == eps && row.estimator == estimator && row.metric == metric) {
      return row.median;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ExperimentCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "mechanism,eps,estimator,replication,metric,value,runtime_ms,status\n";
  for (const ExperimentRow& r : rows) {
    absl::StrAppendFormat(&out, "%s,%g,%s,%d,%s,%.12g,%.3f,%s\n", r.mechanism,
                          r.eps, r.estimator, r.replication, r.metric, r.value,
                          r.runtime_ms, r.status);
  }
  return out;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows) {
  std::string out = "mechanism,eps,estimator,metric,count,min,q1,median,q3,max\n";
  for (const SummaryRow& r : rows) {
    absl::StrAppendFormat(&out, "%s,%g,%s,%s,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                          r.mechanism, r.eps, r.estimator, r.metric, r.count,
                          r.min, r.q1, r.median, r.q3, r.max);
  }
  return out;
}

}  // namespace ldp
