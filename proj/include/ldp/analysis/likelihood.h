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

#ifndef LDP_ANALYSIS_LIKELIHOOD_H_
#define LDP_ANALYSIS_LIKELIHOOD_H_

#include <span>

#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"
#include "ldp/core/obs_matrix.h"

namespace ldp {

// L(phi) = sum_j w_j log(sum_x phi[x] G[x][j]). Returns -infinity when some
// observed report has zero probability under phi; that value is a legitimate
// likelihood, not an error.
absl::StatusOr<double> LogLikelihood(const ObsMatrix& g,
                                     const Distribution& phi);

// Same, for a raw vector over the rows (no alphabet check).
double LogLikelihood(const ObsMatrix& g, std::span<const double> phi);

}  // namespace ldp

#endif  // LDP_ANALYSIS_LIKELIHOOD_H_
