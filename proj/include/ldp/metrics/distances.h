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

#ifndef LDP_METRICS_DISTANCES_H_
#define LDP_METRICS_DISTANCES_H_

#include <span>

#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"

namespace ldp {

// Total variation distance, 1/2 sum |p - q|.
absl::StatusOr<double> TotalVariation(const Distribution& p,
                                      const Distribution& q);
absl::StatusOr<double> TotalVariation(std::span<const double> p,
                                      std::span<const double> q);

// Squared Euclidean error sum (v_i - theta_i)^2 of an arbitrary real vector
// (for example a raw inversion estimate) against a distribution.
absl::StatusOr<double> SquaredError(std::span<const double> v,
                                    const Distribution& theta);

}  // namespace ldp

#endif  // LDP_METRICS_DISTANCES_H_
