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

#ifndef LDP_METRICS_EMD_H_
#define LDP_METRICS_EMD_H_

#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"

namespace ldp {

// Optimality residual above which a transport solution is rejected.
inline constexpr double kTransportCertificateTolerance = 1e-7;

struct TransportSolution {
  double cost = 0.0;
  // plan(i, j): mass moved from supply node i to demand node j.
  Eigen::MatrixXd plan;
  // Complementary-slackness residual of the final primal/dual pair:
  // the largest dual constraint violation plus the total flow carried on
  // arcs with nonzero reduced cost.
  double certificate_residual = 0.0;
};

// Exact balanced transportation problem solved by successive shortest paths
// with Dijkstra over reduced costs. `cost` must be non-negative and
// supply/demand non-negative with equal totals (up to rounding).
// SolverNonConvergence if the final certificate exceeds the tolerance.
absl::StatusOr<TransportSolution> SolveTransport(
    const std::vector<double>& supply, const std::vector<double>& demand,
    const Eigen::MatrixXd& cost);

// Earth mover's distance on a linear alphabet: sum over consecutive values of
// |CDF_p - CDF_q| times the gap.
absl::StatusOr<double> Emd1d(const Distribution& p, const Distribution& q);

// Earth mover's distance on a planar alphabet with Euclidean ground distance
// between cell centers.
absl::StatusOr<double> EmdPlanar(const Distribution& p, const Distribution& q);

// Dispatches on the alphabet kind. Categorical alphabets use the discrete
// metric, under which the transport cost equals total variation.
absl::StatusOr<double> Emd(const Distribution& p, const Distribution& q);

}  // namespace ldp

#endif  // LDP_METRICS_EMD_H_
