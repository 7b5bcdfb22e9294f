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

#include "ldp/core/distribution.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<Distribution> Distribution::Create(Alphabet alphabet,
                                                  std::vector<double> weights) {
  if (weights.size() != alphabet.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("LengthMismatch: ", weights.size(),
                     " weights for an alphabet of size ", alphabet.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("NonFiniteWeight: weight ", i, " is not finite"));
    }
    if (weights[i] < 0.0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "NegativeWeight: weight ", i, " is ", weights[i]));
    }
    sum += weights[i];
  }
  if (!(sum > 0.0)) {
    return absl::InvalidArgumentError("ZeroSum: weights sum to zero");
  }
  for (double& w : weights) w /= sum;
  return Distribution(std::move(alphabet), std::move(weights));
}

Distribution Distribution::Uniform(Alphabet alphabet) {
  const std::size_t k = alphabet.size();
  return Distribution(std::move(alphabet),
                      std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

absl::StatusOr<Distribution> Distribution::PointMass(Alphabet alphabet,
                                                     std::size_t index) {
  if (index >= alphabet.size()) {
    return absl::OutOfRangeError("point mass index outside the alphabet");
  }
  std::vector<double> probs(alphabet.size(), 0.0);
  probs[index] = 1.0;
  return Distribution(std::move(alphabet), std::move(probs));
}

std::size_t Distribution::SupportSize() const {
  std::size_t s = 0;
  for (double p : probs_) s += p > 0.0 ? 1 : 0;
  return s;
}

}  // namespace ldp
