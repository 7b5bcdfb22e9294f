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

#ifndef LDP_ESTIMATORS_IBU_H_
#define LDP_ESTIMATORS_IBU_H_

#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "ldp/core/distribution.h"
#include "ldp/core/obs_matrix.h"

namespace ldp {

struct IbuOptions {
  // Stop once the log-likelihood changes by less than this between two
  // consecutive iterates.
  double delta = 1e-10;
  int max_iter = 100000;
  bool record_trace = true;
};

struct IbuResult {
  Distribution estimate;
  // Number of update steps applied to the starting distribution.
  int iterations = 0;
  // Log-likelihood of theta^0, theta^1, ..., theta^iterations (when
  // recorded; otherwise only the last value).
  std::vector<double> loglik_trace;
  bool converged = false;
};

// The iterative Bayesian update (EM for the mixture weights):
//
//   theta'[x] = sum_j q_j theta[x] G[x][j] / sum_u theta[u] G[u][j]
//
// where q_j is the weight of column j divided by the total weight. Runs
// until |L(theta^t) - L(theta^{t-1})| < delta or max_iter updates; hitting
// max_iter returns converged = false rather than an error.
//
// Errors: ZeroSupportStart when theta0 has a zero entry; DeadColumn when an
// observed report has probability zero under every secret.
absl::StatusOr<IbuResult> Ibu(const ObsMatrix& g, const Distribution& theta0,
                              const IbuOptions& options = {});

// Starts from the uniform distribution.
absl::StatusOr<IbuResult> Ibu(const ObsMatrix& g,
                              const IbuOptions& options = {});

// Distribution JSON plus {"iterations", "converged", "loglik"}.
nlohmann::json IbuResultToJson(const IbuResult& result);

}  // namespace ldp

#endif  // LDP_ESTIMATORS_IBU_H_
