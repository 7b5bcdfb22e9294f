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

#ifndef LDP_ESTIMATORS_RAPPOR_DECODE_H_
#define LDP_ESTIMATORS_RAPPOR_DECODE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/observation.h"

namespace ldp {

enum class PostProcess { kNormalize, kProject };

// Number of reports with bit y set, for every position y.
absl::StatusOr<std::vector<std::int64_t>> RapporBitCounts(
    const ObservationSet& obs, std::size_t length);

// Per-position randomized-response inversion
//   t_y = (count_y / n - (1 - p)) / (2p - 1),  p = e^{eps/2} / (1 + e^{eps/2}),
// followed by clip-and-normalize or simplex projection of t.
absl::StatusOr<Distribution> RapporDecode(std::span<const std::int64_t> bit_counts,
                                          std::int64_t n, double eps_ldp,
                                          PostProcess post,
                                          const Alphabet& alphabet);

// The unbiased vector t before post-processing.
absl::StatusOr<std::vector<double>> RapporUnbiasedCounts(
    std::span<const std::int64_t> bit_counts, std::int64_t n, double eps_ldp);

}  // namespace ldp

#endif  // LDP_ESTIMATORS_RAPPOR_DECODE_H_
