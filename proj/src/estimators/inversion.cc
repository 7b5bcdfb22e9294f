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

#include "ldp/estimators/inversion.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "Eigen/LU"
#include "Eigen/SVD"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<MechanismInverse> MechanismInverse::Create(
    const Mechanism& mech) {
  if (!mech.is_finite() || mech.matrix().rows() != mech.matrix().cols()) {
    return absl::InvalidArgumentError(
        "NonSquareMechanism: matrix inversion needs a square finite "
        "mechanism");
  }
  const Eigen::MatrixXd& m = mech.matrix();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  const double cond = smin > 0.0 ? s(0) / smin
                                 : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxConditionNumber)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "SingularMechanism: condition number ", cond, " exceeds ",
        kMaxConditionNumber));
  }
  MechanismInverse out;
  out.inverse_ = m.partialPivLu().inverse();
  out.condition_number_ = cond;
  return out;
}

std::vector<double> MechanismInverse::Apply(std::span<const double> q) const {
  const Eigen::Map<const Eigen::RowVectorXd> qv(
      q.data(), static_cast<Eigen::Index>(q.size()));
  const Eigen::RowVectorXd v = qv * inverse_;
  return std::vector<double>(v.data(), v.data() + v.size());
}

absl::StatusOr<std::vector<double>> EmpiricalVector(const Mechanism& mech,
                                                    const Empirical& q) {
  if (!mech.is_finite()) {
    return absl::InvalidArgumentError(
        "NonSquareMechanism: matrix inversion needs a finite mechanism");
  }
  std::vector<double> out(mech.output().size(), 0.0);
  for (std::size_t i = 0; i < q.values.size(); ++i) {
    std::optional<std::size_t> z = mech.output().IndexOf(q.values[i]);
    if (!z) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: '", EncodeReport(q.values[i]),
          "' is not an output of the mechanism"));
    }
    out[*z] += q.freqs[i];
  }
  return out;
}

absl::StatusOr<std::vector<double>> InvRaw(const Empirical& q,
                                           const Mechanism& mech) {
  absl::StatusOr<MechanismInverse> inv = MechanismInverse::Create(mech);
  if (!inv.ok()) return inv.status();
  absl::StatusOr<std::vector<double>> qv = EmpiricalVector(mech, q);
  if (!qv.ok()) return qv.status();
  return inv->Apply(*qv);
}

absl::StatusOr<Distribution> InvNormalize(std::span<const double> v,
                                          const Alphabet& alphabet) {
  std::vector<double> clipped(v.size());
  bool any_positive = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    clipped[i] = std::max(v[i], 0.0);
    any_positive |= clipped[i] > 0.0;
  }
  if (!any_positive) {
    return absl::InvalidArgumentError(
        "AllNonPositive: no positive component to normalize");
  }
  return Distribution::Create(alphabet, std::move(clipped));
}

std::vector<double> ProjectOntoSimplex(std::span<const double> v) {
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double prefix = 0.0;
  double lambda = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    prefix += u[j];
    const double candidate = (1.0 - prefix) / static_cast<double>(j + 1);
    if (u[j] + candidate > 0.0) lambda = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] + lambda, 0.0);
  return out;
}

absl::StatusOr<Distribution> InvProject(std::span<const double> v,
                                        const Alphabet& alphabet) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      return absl::InvalidArgumentError("projection input must be finite");
    }
  }
  return Distribution::Create(alphabet, ProjectOntoSimplex(v));
}

}  // namespace ldp
