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

#ifndef LDP_ANALYSIS_CONCAVITY_H_
#define LDP_ANALYSIS_CONCAVITY_H_

#include <optional>
#include <vector>

#include "Eigen/Core"
#include "json.hpp"
#include "ldp/core/mechanism.h"
#include "ldp/core/obs_matrix.h"

namespace ldp {

inline constexpr double kDefaultRankTolerance = 1e-10;

// Numerical rank: singular values above tol * sigma_max * max(rows, cols).
int NumericalRank(const Eigen::MatrixXd& a, double tol = kDefaultRankTolerance);

struct ConcavityReport {
  bool strictly_concave = false;
  int rank_found = 0;
  int rank_required = 0;
  // When not strictly concave: w != 0 with sum(w) = 0 and w G = 0, scaled so
  // that max |w_x| = 1. Moving from phi to phi + t w leaves L unchanged.
  std::optional<std::vector<double>> witness;
};

// The log-likelihood is strictly concave exactly when no nonzero w with
// sum(w) = 0 satisfies w G = 0, i.e. when the rows of [G | 1] are linearly
// independent: the all-ones column turns the constraint sum(w) = 0 into one
// more orthogonality condition. The test is therefore
// rank([G | 1]) == |X|. Column scaling does not change the rank, so each
// column of G is first scaled to unit maximum.
ConcavityReport StrictConcavityCheck(const ObsMatrix& g,
                                     double tol = kDefaultRankTolerance);

// A finite mechanism identifies the input distribution exactly when it has
// |X| linearly independent columns.
bool IdentificationCheck(const Mechanism& mech,
                         double tol = kDefaultRankTolerance);

nlohmann::json ConcavityReportToJson(const ConcavityReport& report);

}  // namespace ldp

#endif  // LDP_ANALYSIS_CONCAVITY_H_
