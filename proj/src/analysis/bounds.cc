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

#include "ldp/analysis/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<double> RapporConcavityProbBound(int k, double eps_ldp,
                                                std::int64_t n) {
  if (k < 1) return absl::InvalidArgumentError("alphabet size must be >= 1");
  if (n < k) {
    return absl::InvalidArgumentError(absl::StrCat(
        "TooFewObservations: the bound needs n >= |X| (n = ", n,
        ", |X| = ", k, ")"));
  }
  const double log_p = -std::log1p(std::exp(-eps_ldp / 2.0));
  double bound = 1.0;
  for (int j = 1; j <= k; ++j) {
    const double term = std::exp(static_cast<double>(n) * log_p +
                                 (j - 1) * std::numbers::ln2);
    bound *= std::max(0.0, 1.0 - term);
  }
  return bound;
}

absl::StatusOr<double> InvKrrErrorBound(int k, double eps_ldp,
                                        std::int64_t n) {
  if (k < 2 || n < 1 || !(eps_ldp > 0.0)) {
    return absl::InvalidArgumentError(
        "the k-RR bound needs k >= 2, n >= 1 and eps > 0");
  }
  const double e = std::exp(eps_ldp);
  const double ratio = (e + k - 1) / (e - 1);
  return ratio * ratio / static_cast<double>(n);
}

absl::StatusOr<double> InvGeometricErrorLowerBound(double eps_geo,
                                                   std::int64_t n) {
  if (n < 1 || !(eps_geo > 0.0)) {
    return absl::InvalidArgumentError("the bound needs n >= 1 and eps > 0");
  }
  const double alpha = std::exp(-eps_geo);
  if (!(alpha > 0.5)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "AlphaTooSmall: e^-eps = ", alpha, " must exceed 1/2"));
  }
  const double beta = 1.0 / (1.0 - alpha);
  return (beta * beta * beta - 2.0 * alpha * beta * beta - 2.0) /
         static_cast<double>(n);
}

}  // namespace ldp
