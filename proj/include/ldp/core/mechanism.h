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

#ifndef LDP_CORE_MECHANISM_H_
#define LDP_CORE_MECHANISM_H_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "Eigen/Core"
#include "ldp/core/alphabet.h"
#include "ldp/core/random.h"
#include "ldp/core/report.h"

namespace ldp {

enum class OutputDomain { kFinite, kIntegerLine, kPlane, kBitVectors };

// Which construction produced a mechanism. Estimators and the likely-subset
// machinery use it to check their premises.
enum class MechanismKind {
  kCustom,
  kIdentity,
  kKrr,
  kGeometricLinear,
  kTruncatedGeometric,
  kGeometricPlanar,
  kLaplaceLinear,
  kLaplacePlanar,
  kLaplacePlanarContinuous,
  kExponential,
  kRappor,
};

absl::string_view MechanismKindName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name);

// True for kinds whose kernel strictly decreases with the distance between
// input and output, the premise of the interval and hull reductions.
bool IsDistanceMonotone(MechanismKind kind);

// A conditional probability kernel M[x][z] = P(report z | secret x).
//
// Finite mechanisms carry a dense row-stochastic |X| x |Z| matrix and an
// output alphabet. Kernel mechanisms (integer line, plane, bit vectors)
// evaluate M lazily; for the continuous plane the kernel is a density.
class Mechanism {
 public:
  using Kernel = std::function<double(std::size_t x, const Report& z)>;
  using Sampler = std::function<Report(std::size_t x, Rng& rng)>;

  // Rows must be non-negative and sum to one within 1e-9.
  static absl::StatusOr<Mechanism> FromMatrix(
      Alphabet input, Alphabet output, Eigen::MatrixXd matrix,
      MechanismKind kind = MechanismKind::kCustom, double epsilon = 0.0);

  static Mechanism FromKernel(Alphabet input, OutputDomain domain,
                              std::size_t bit_length, Kernel kernel,
                              Sampler sampler, MechanismKind kind,
                              double epsilon);

  const Alphabet& input() const { return input_; }
  OutputDomain domain() const { return domain_; }
  MechanismKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  bool is_finite() const { return domain_ == OutputDomain::kFinite; }
  std::size_t bit_length() const { return bit_length_; }

  // Finite mechanisms only.
  const Alphabet& output() const { return *output_; }
  const Eigen::MatrixXd& matrix() const { return *matrix_; }

  bool InDomain(const Report& z) const;

  // M[x][z]; ObservationOutsideDomain when z cannot be produced by this
  // mechanism's output domain.
  absl::StatusOr<double> Probability(std::size_t x, const Report& z) const;

  // Draws z with probability M[x][z].
  Report Sample(std::size_t x, Rng& rng) const;

 private:
  Mechanism() = default;

  Alphabet input_ = *Alphabet::IntegerRange(0, 0);
  OutputDomain domain_ = OutputDomain::kFinite;
  MechanismKind kind_ = MechanismKind::kCustom;
  double epsilon_ = 0.0;
  std::size_t bit_length_ = 0;
  std::optional<Alphabet> output_;
  std::shared_ptr<const Eigen::MatrixXd> matrix_;
  // Row-wise running sums of the matrix, for sampling.
  std::shared_ptr<const std::vector<std::vector<double>>> cumulative_;
  Kernel kernel_;
  Sampler sampler_;
};

}  // namespace ldp

#endif  // LDP_CORE_MECHANISM_H_
