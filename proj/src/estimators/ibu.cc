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

#include "ldp/estimators/ibu.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/core/json_io.h"
#include "ldp/kernels/kernels.h"

namespace ldp {
namespace {

// Fills mix[j] = theta . G[:, j] and returns sum_j w_j log mix[j].
double MixAndLogLikelihood(const ObsMatrix& g, std::span<const double> theta,
                           std::vector<double>& mix) {
  double loglik = 0.0;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    mix[j] = kernels::Dot(theta, g.column(j));
    loglik += g.weights()[j] * std::log(mix[j]);
  }
  return loglik;
}

}  // namespace

absl::StatusOr<IbuResult> Ibu(const ObsMatrix& g, const Distribution& theta0,
                              const IbuOptions& options) {
  if (!(theta0.alphabet() == g.input())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: starting distribution is not over the matrix rows");
  }
  if (g.cols() == 0) {
    return absl::InvalidArgumentError("EmptyObservations: no columns");
  }
  for (double p : theta0.probs()) {
    if (!(p > 0.0)) {
      return absl::InvalidArgumentError(
          "ZeroSupportStart: the starting distribution must have full "
          "support");
    }
  }
  for (std::size_t j = 0; j < g.cols(); ++j) {
    bool alive = false;
    for (double v : g.column(j)) alive |= v > 0.0;
    if (!alive) {
      return absl::InvalidArgumentError(absl::StrCat(
          "DeadColumn: observation ", j,
          " has zero probability under every secret value"));
    }
  }
  if (!(options.delta > 0.0) || options.max_iter < 1) {
    return absl::InvalidArgumentError("IBU needs delta > 0 and max_iter >= 1");
  }

  const std::size_t k = g.rows();
  const double total = g.total_weight();
  std::vector<double> theta(theta0.probs().begin(), theta0.probs().end());
  std::vector<double> acc(k);
  std::vector<double> mix(g.cols());

  IbuResult result{theta0, 0, {}, false};
  double loglik = MixAndLogLikelihood(g, theta, mix);
  if (options.record_trace) result.loglik_trace.push_back(loglik);

  for (int t = 1; t <= options.max_iter; ++t) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      kernels::Axpy(g.weights()[j] / (total * mix[j]), g.column(j), acc);
    }
    double sum = 0.0;
    for (std::size_t x = 0; x < k; ++x) {
      theta[x] *= acc[x];
      sum += theta[x];
    }
    // The update conserves mass exactly; this only removes rounding drift.
    for (double& v : theta) v /= sum;

    const double next = MixAndLogLikelihood(g, theta, mix);
    if (options.record_trace) result.loglik_trace.push_back(next);
    result.iterations = t;
    const double change = std::fabs(next - loglik);
    loglik = next;
    if (change < options.delta) {
      result.converged = true;
      break;
    }
  }
  if (!options.record_trace) result.loglik_trace.push_back(loglik);
  absl::StatusOr<Distribution> estimate =
      Distribution::Create(g.input(), std::move(theta));
  if (!estimate.ok()) return estimate.status();
  result.estimate = *std::move(estimate);
  return result;
}

absl::StatusOr<IbuResult> Ibu(const ObsMatrix& g, const IbuOptions& options) {
  return Ibu(g, Distribution::Uniform(g.input()), options);
}

nlohmann::json IbuResultToJson(const IbuResult& result) {
  nlohmann::json j = DistributionToJson(result.estimate);
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["loglik"] = result.loglik_trace;
  return j;
}

}  // namespace ldp
