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

#ifndef LDP_ANALYSIS_BOUNDS_H_
#define LDP_ANALYSIS_BOUNDS_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace ldp {

// Lower bound on the probability that the RAPPOR log-likelihood is strictly
// concave after n reports over an alphabet of size k:
//   prod_{j=1..k} max{0, 1 - p^n 2^{j-1}},  p = e^{eps/2} / (1 + e^{eps/2}).
// TooFewObservations when n < k.
absl::StatusOr<double> RapporConcavityProbBound(int k, double eps_ldp,
                                                std::int64_t n);

// Upper bound on E ||q M^{-1} - theta||^2 under k-RR:
//   (1/n) ((e^eps + k - 1) / (e^eps - 1))^2.
absl::StatusOr<double> InvKrrErrorBound(int k, double eps_ldp, std::int64_t n);

// Lower bound on E ||q M^{-1} - theta||^2 under the linear geometric
// mechanism, valid when alpha = e^{-eps} > 1/2:
//   (1/n) (beta^3 - 2 alpha beta^2 - 2),  beta = 1 / (1 - e^{-eps}).
// AlphaTooSmall when eps >= ln 2.
absl::StatusOr<double> InvGeometricErrorLowerBound(double eps_geo,
                                                   std::int64_t n);

}  // namespace ldp

#endif  // LDP_ANALYSIS_BOUNDS_H_
