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

#include "ldp/metrics/distances.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/kernels/kernels.h"

namespace ldp {
namespace {

absl::Status CheckLengths(std::size_t a, std::size_t b) {
  if (a != b) {
    return absl::InvalidArgumentError(
        absl::StrCat("LengthMismatch: ", a, " vs ", b));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> TotalVariation(std::span<const double> p,
                                      std::span<const double> q) {
  if (auto s = CheckLengths(p.size(), q.size()); !s.ok()) return s;
  return 0.5 * kernels::AbsDistance(p, q);
}

absl::StatusOr<double> TotalVariation(const Distribution& p,
                                      const Distribution& q) {
  if (!(p.alphabet() == q.alphabet())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: distributions over different alphabets");
  }
  return TotalVariation(p.probs(), q.probs());
}

absl::StatusOr<double> SquaredError(std::span<const double> v,
                                    const Distribution& theta) {
  if (auto s = CheckLengths(v.size(), theta.size()); !s.ok()) return s;
  return kernels::SquaredDistance(v, theta.probs());
}

}  // namespace ldp
