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

#include "ldp/core/mechanism.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/core/distribution.h"

namespace ldp {
namespace {

struct KindName {
  MechanismKind kind;
  absl::string_view name;
};

constexpr KindName kKindNames[] = {
    {MechanismKind::kCustom, "custom"},
    {MechanismKind::kIdentity, "identity"},
    {MechanismKind::kKrr, "krr"},
    {MechanismKind::kGeometricLinear, "geometric_linear"},
    {MechanismKind::kTruncatedGeometric, "truncated_geometric"},
    {MechanismKind::kGeometricPlanar, "geometric_planar"},
    {MechanismKind::kLaplaceLinear, "laplace_linear"},
    {MechanismKind::kLaplacePlanar, "laplace_planar"},
    {MechanismKind::kLaplacePlanarContinuous, "laplace_planar_continuous"},
    {MechanismKind::kExponential, "exponential"},
    {MechanismKind::kRappor, "rappor"},
};

}  // namespace

absl::string_view MechanismKindName(MechanismKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "custom";
}

absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name) {
  for (const auto& k : kKindNames) {
    if (k.name == name) return k.kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism kind '", name, "'"));
}

bool IsDistanceMonotone(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kIdentity:
    case MechanismKind::kGeometricLinear:
    case MechanismKind::kTruncatedGeometric:
    case MechanismKind::kLaplaceLinear:
    case MechanismKind::kLaplacePlanarContinuous:
      return true;
    default:
      return false;
  }
}

absl::StatusOr<Mechanism> Mechanism::FromMatrix(Alphabet input,
                                                Alphabet output,
                                                Eigen::MatrixXd matrix,
                                                MechanismKind kind,
                                                double epsilon) {
  if (static_cast<std::size_t>(matrix.rows()) != input.size() ||
      static_cast<std::size_t>(matrix.cols()) != output.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mechanism matrix is ", matrix.rows(), "x", matrix.cols(),
        " but alphabets have sizes ", input.size(), " and ", output.size()));
  }
  auto cumulative = std::make_shared<std::vector<std::vector<double>>>();
  cumulative->resize(input.size());
  for (Eigen::Index x = 0; x < matrix.rows(); ++x) {
    double sum = 0.0;
    auto& row = (*cumulative)[x];
    row.reserve(output.size());
    for (Eigen::Index z = 0; z < matrix.cols(); ++z) {
      const double v = matrix(x, z);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "mechanism entry (", x, ", ", z, ") = ", v,
            " is not a probability"));
      }
      sum += v;
      row.push_back(sum);
    }
    if (std::fabs(sum - 1.0) > kProbabilityTolerance) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mechanism row ", x, " sums to ", sum, ", not 1"));
    }
  }
  Mechanism m;
  m.input_ = std::move(input);
  m.output_ = std::move(output);
  m.domain_ = OutputDomain::kFinite;
  m.kind_ = kind;
  m.epsilon_ = epsilon;
  m.matrix_ = std::make_shared<const Eigen::MatrixXd>(std::move(matrix));
  m.cumulative_ = std::move(cumulative);
  return m;
}

Mechanism Mechanism::FromKernel(Alphabet input, OutputDomain domain,
                                std::size_t bit_length, Kernel kernel,
                                Sampler sampler, MechanismKind kind,
                                double epsilon) {
  Mechanism m;
  m.input_ = std::move(input);
  m.domain_ = domain;
  m.bit_length_ = bit_length;
  m.kernel_ = std::move(kernel);
  m.sampler_ = std::move(sampler);
  m.kind_ = kind;
  m.epsilon_ = epsilon;
  return m;
}

bool Mechanism::InDomain(const Report& z) const {
  switch (domain_) {
    case OutputDomain::kFinite:
      return output_->IndexOf(z).has_value();
    case OutputDomain::kIntegerLine:
      return std::holds_alternative<std::int64_t>(z);
    case OutputDomain::kPlane:
      return std::holds_alternative<PlanarPoint>(z);
    case OutputDomain::kBitVectors: {
      const auto* b = std::get_if<BitVector>(&z);
      return b != nullptr && b->size() == bit_length_;
    }
  }
  return false;
}

absl::StatusOr<double> Mechanism::Probability(std::size_t x,
                                              const Report& z) const {
  if (x >= input_.size()) {
    return absl::OutOfRangeError("input index outside the alphabet");
  }
  if (domain_ == OutputDomain::kFinite) {
    const std::optional<std::size_t> zi = output_->IndexOf(z);
    if (!zi) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: '", EncodeReport(z),
          "' is not an output of this mechanism"));
    }
    return (*matrix_)(static_cast<Eigen::Index>(x),
                      static_cast<Eigen::Index>(*zi));
  }
  if (!InDomain(z)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ObservationOutsideDomain: '", EncodeReport(z),
        "' is not an output of this mechanism"));
  }
  return kernel_(x, z);
}

Report Mechanism::Sample(std::size_t x, Rng& rng) const {
  if (domain_ == OutputDomain::kFinite) {
    return output_->ElementAt(SampleCumulative(rng, (*cumulative_)[x]));
  }
  return sampler_(x, rng);
}

}  // namespace ldp
