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

#ifndef LDP_CORE_DISTRIBUTION_H_
#define LDP_CORE_DISTRIBUTION_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"

namespace ldp {

// Entries of a stored distribution are non-negative and sum to one within
// this tolerance.
inline constexpr double kProbabilityTolerance = 1e-9;

// A probability vector over an alphabet.
class Distribution {
 public:
  // Normalizes non-negative finite weights. Negative weights are rejected,
  // never clipped.
  static absl::StatusOr<Distribution> Create(Alphabet alphabet,
                                             std::vector<double> weights);
  static Distribution Uniform(Alphabet alphabet);
  static absl::StatusOr<Distribution> PointMass(Alphabet alphabet,
                                                std::size_t index);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  // Number of strictly positive entries.
  std::size_t SupportSize() const;

 private:
  Distribution(Alphabet alphabet, std::vector<double> probs)
      : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {}

  Alphabet alphabet_;
  std::vector<double> probs_;
};

}  // namespace ldp

#endif  // LDP_CORE_DISTRIBUTION_H_
