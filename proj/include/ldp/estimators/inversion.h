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

#ifndef LDP_ESTIMATORS_INVERSION_H_
#define LDP_ESTIMATORS_INVERSION_H_

#include <span>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"

namespace ldp {

// Condition numbers above this make q M^{-1} numerically meaningless.
inline constexpr double kMaxConditionNumber = 1e12;

// The inverse of a square finite mechanism, computed once and applied to
// many empirical distributions.
class MechanismInverse {
 public:
  // NonSquareMechanism or SingularMechanism on failure.
  static absl::StatusOr<MechanismInverse> Create(const Mechanism& mech);

  // v = q M^{-1}, q indexed by the mechanism's outputs. Components of v may
  // be negative.
  std::vector<double> Apply(std::span<const double> q) const;

  double condition_number() const { return condition_number_; }
  const Eigen::MatrixXd& inverse() const { return inverse_; }

 private:
  MechanismInverse() = default;
  Eigen::MatrixXd inverse_;
  double condition_number_ = 0.0;
};

// The empirical distribution as a dense vector over the mechanism outputs.
absl::StatusOr<std::vector<double>> EmpiricalVector(const Mechanism& mech,
                                                    const Empirical& q);

// v = q M^{-1}.
absl::StatusOr<std::vector<double>> InvRaw(const Empirical& q,
                                           const Mechanism& mech);

// Clips negative components to zero and normalizes. AllNonPositive when no
// component is positive.
absl::StatusOr<Distribution> InvNormalize(std::span<const double> v,
                                          const Alphabet& alphabet);

// Euclidean projection onto the probability simplex (sort and threshold).
std::vector<double> ProjectOntoSimplex(std::span<const double> v);

absl::StatusOr<Distribution> InvProject(std::span<const double> v,
                                        const Alphabet& alphabet);

}  // namespace ldp

#endif  // LDP_ESTIMATORS_INVERSION_H_
