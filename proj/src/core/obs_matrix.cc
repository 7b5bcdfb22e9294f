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

#include "ldp/core/obs_matrix.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<ObsMatrix> ObsMatrix::Build(const Mechanism& mech,
                                           const ObservationSet& obs) {
  const std::size_t k = mech.input().size();
  Eigen::MatrixXd g(static_cast<Eigen::Index>(k),
                    static_cast<Eigen::Index>(obs.distinct()));
  std::vector<double> weights;
  std::vector<Report> values;
  weights.reserve(obs.distinct());
  values.reserve(obs.distinct());
  Eigen::Index j = 0;
  for (const auto& [z, count] : obs.counts()) {
    if (!mech.InDomain(z)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: report '", EncodeReport(z),
          "' is not an output of the mechanism"));
    }
    if (mech.is_finite()) {
      g.col(j) = mech.matrix().col(
          static_cast<Eigen::Index>(*mech.output().IndexOf(z)));
    } else {
      for (std::size_t x = 0; x < k; ++x) {
        g(static_cast<Eigen::Index>(x), j) = *mech.Probability(x, z);
      }
    }
    weights.push_back(static_cast<double>(count));
    values.push_back(z);
    ++j;
  }
  return FromColumns(mech.input(), std::move(g), std::move(weights),
                     std::move(values));
}

absl::StatusOr<ObsMatrix> ObsMatrix::FromColumns(Alphabet input,
                                                 Eigen::MatrixXd columns,
                                                 std::vector<double> weights,
                                                 std::vector<Report> values) {
  if (static_cast<std::size_t>(columns.rows()) != input.size()) {
    return absl::InvalidArgumentError(
        "observation matrix rows do not match the input alphabet");
  }
  if (static_cast<std::size_t>(columns.cols()) != weights.size() ||
      (!values.empty() && values.size() != weights.size())) {
    return absl::InvalidArgumentError(
        "observation matrix columns do not match the weights");
  }
  ObsMatrix m;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      return absl::InvalidArgumentError("column weights must be positive");
    }
    m.total_weight_ += w;
  }
  for (Eigen::Index i = 0; i < columns.size(); ++i) {
    const double v = columns.data()[i];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          "observation matrix entries must be finite and non-negative");
    }
  }
  m.input_ = std::move(input);
  m.g_ = std::move(columns);
  m.weights_ = std::move(weights);
  m.values_ = std::move(values);
  return m;
}

absl::StatusOr<ObsMatrix> ObsMatrix::Asymptotic(const Mechanism& mech,
                                                const Distribution& theta) {
  if (!mech.is_finite()) {
    return absl::InvalidArgumentError(
        "asymptotic observations need a finite mechanism");
  }
  if (!(theta.alphabet() == mech.input())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: distribution is not over the mechanism input");
  }
  const Eigen::Map<const Eigen::RowVectorXd> th(
      theta.probs().data(), static_cast<Eigen::Index>(theta.size()));
  const Eigen::RowVectorXd q = th * mech.matrix();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index z = 0; z < q.size(); ++z) {
    if (q(z) > 0.0) kept.push_back(z);
  }
  Eigen::MatrixXd g(mech.matrix().rows(),
                    static_cast<Eigen::Index>(kept.size()));
  std::vector<double> weights;
  std::vector<Report> values;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    g.col(static_cast<Eigen::Index>(j)) = mech.matrix().col(kept[j]);
    weights.push_back(q(kept[j]));
    values.push_back(mech.output().ElementAt(static_cast<std::size_t>(kept[j])));
  }
  return FromColumns(mech.input(), std::move(g), std::move(weights),
                     std::move(values));
}

absl::StatusOr<ObsMatrix> ObsMatrix::RestrictRows(
    const std::vector<std::size_t>& rows) const {
  absl::StatusOr<Alphabet> sub = input_.Subset(rows);
  if (!sub.ok()) return sub.status();
  Eigen::MatrixXd g(static_cast<Eigen::Index>(rows.size()), g_.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    g.row(static_cast<Eigen::Index>(r)) =
        g_.row(static_cast<Eigen::Index>(rows[r]));
  }
  return FromColumns(*std::move(sub), std::move(g), weights_, values_);
}

}  // namespace ldp
