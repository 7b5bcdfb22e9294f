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

#ifndef LDP_ANALYSIS_MLE_ORACLE_H_
#define LDP_ANALYSIS_MLE_ORACLE_H_

#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"
#include "ldp/core/obs_matrix.h"

namespace ldp {

inline constexpr std::size_t kMleOracleMaxAlphabet = 5;
inline constexpr double kMleOracleMaxStep = 0.05;

// Brute-force maximizer of the log-likelihood for small alphabets, intended
// as an independent check on IBU. Evaluates L on every point of the simplex
// lattice with spacing `grid_step`, then refines around the best point: the
// lattice spacing is halved ten times, and at each spacing the point climbs
// by moving one spacing of mass between two coordinates until no such move
// improves L. Ties keep the earliest point in enumeration order.
absl::StatusOr<Distribution> MleOracle(const ObsMatrix& g,
                                       double grid_step = kMleOracleMaxStep);

}  // namespace ldp

#endif  // LDP_ANALYSIS_MLE_ORACLE_H_
