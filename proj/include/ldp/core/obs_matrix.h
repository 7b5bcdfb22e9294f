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

#ifndef LDP_CORE_OBS_MATRIX_H_
#define LDP_CORE_OBS_MATRIX_H_

#include <span>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"

namespace ldp {

// The observations probability matrix: one row per secret value, one column
// per distinct observed report, G[x][j] = M[x][z_j]. Each column carries the
// number of times (or, for asymptotic inputs, the frequency with which) its
// report was observed.
//
// Columns are stored contiguously (column-major) so the estimators can run
// the SIMD dot/axpy kernels over them.
class ObsMatrix {
 public:
  static absl::StatusOr<ObsMatrix> Build(const Mechanism& mech,
                                          const ObservationSet& obs);

  // Direct construction. Weights must be positive and finite; entries must
  // lie in [0, inf) (densities are allowed for continuous outputs).
  static absl::StatusOr<ObsMatrix> FromColumns(Alphabet input,
                                               Eigen::MatrixXd columns,
                                               std::vector<double> weights,
                                               std::vector<Report> values = {});

  // The limit of infinitely many observations: every output z of a finite
  // mechanism with weight (theta M)_z. Outputs of zero probability are
  // dropped.
  static absl::StatusOr<ObsMatrix> Asymptotic(const Mechanism& mech,
                                              const Distribution& theta);

  const Alphabet& input() const { return input_; }
  const Eigen::MatrixXd& matrix() const { return g_; }
  std::size_t rows() const { return static_cast<std::size_t>(g_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(g_.cols()); }
  std::span<const double> column(std::size_t j) const {
    return {g_.col(static_cast<Eigen::Index>(j)).data(), rows()};
  }
  std::span<const double> weights() const { return weights_; }
  double total_weight() const { return total_weight_; }
  // The report behind each column; empty when built from raw columns.
  const std::vector<Report>& values() const { return values_; }

  // Keeps only the listed rows (strictly increasing indices).
  absl::StatusOr<ObsMatrix> RestrictRows(
      const std::vector<std::size_t>& rows) const;

 private:
  ObsMatrix() = default;

  Alphabet input_ = *Alphabet::IntegerRange(0, 0);
  Eigen::MatrixXd g_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  std::vector<Report> values_;
};

}  // namespace ldp

#endif  // LDP_CORE_OBS_MATRIX_H_
