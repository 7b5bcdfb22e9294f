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

#include "ldp/estimators/rappor_decode.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/estimators/inversion.h"
#include "ldp/mechanisms/mechanisms.h"

namespace ldp {

absl::StatusOr<std::vector<std::int64_t>> RapporBitCounts(
    const ObservationSet& obs, std::size_t length) {
  std::vector<std::int64_t> counts(length, 0);
  for (const auto& [value, count] : obs.counts()) {
    const auto* bits = std::get_if<BitVector>(&value);
    if (bits == nullptr || bits->size() != length) {
      return absl::InvalidArgumentError(absl::StrCat(
          "LengthMismatch: report '", EncodeReport(value),
          "' is not a bit vector of length ", length));
    }
    for (std::size_t y = 0; y < length; ++y) {
      if (bits->bits[y]) counts[y] += count;
    }
  }
  return counts;
}

absl::StatusOr<std::vector<double>> RapporUnbiasedCounts(
    std::span<const std::int64_t> bit_counts, std::int64_t n, double eps_ldp) {
  if (n < 1) {
    return absl::InvalidArgumentError("EmptyObservations: n must be >= 1");
  }
  const double p = RapporKeepProbability(eps_ldp);
  if (!(std::fabs(2.0 * p - 1.0) > 0.0)) {
    return absl::InvalidArgumentError(
        "DegenerateP: keep probability 1/2 carries no information");
  }
  std::vector<double> t(bit_counts.size());
  for (std::size_t y = 0; y < bit_counts.size(); ++y) {
    if (bit_counts[y] < 0 || bit_counts[y] > n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "bit count ", bit_counts[y], " at position ", y,
          " is outside [0, n]"));
    }
    const double freq = static_cast<double>(bit_counts[y]) / static_cast<double>(n);
    t[y] = (freq - (1.0 - p)) / (2.0 * p - 1.0);
  }
  return t;
}

absl::StatusOr<Distribution> RapporDecode(
    std::span<const std::int64_t> bit_counts, std::int64_t n, double eps_ldp,
    PostProcess post, const Alphabet& alphabet) {
  if (bit_counts.size() != alphabet.size()) {
    return absl::InvalidArgumentError(
        "LengthMismatch: one bit count per alphabet element is required");
  }
  absl::StatusOr<std::vector<double>> t =
      RapporUnbiasedCounts(bit_counts, n, eps_ldp);
  if (!t.ok()) return t.status();
  return post == PostProcess::kNormalize ? InvNormalize(*t, alphabet)
                                         : InvProject(*t, alphabet);
}

}  // namespace ldp
