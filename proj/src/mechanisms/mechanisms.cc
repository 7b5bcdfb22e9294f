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

#include "ldp/mechanisms/mechanisms.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/core/json_io.h"

namespace ldp {
namespace {

absl::Status CheckGeoEpsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "NonPositiveEpsilon: geo-indistinguishability parameter ", eps,
        " must be positive"));
  }
  return absl::OkStatus();
}

// Mass of the Laplace(x, 1/eps) law on [a, b]; a may be -inf and b +inf.
// Evaluated branch-wise so that far-tail cells keep their relative precision.
double LaplaceCellMass(double x, double a, double b, double eps) {
  if (a >= x) {
    const double upper = std::isinf(b) ? 0.0 : std::exp(-eps * (b - x));
    return 0.5 * (std::exp(-eps * (a - x)) - upper);
  }
  if (b <= x) {
    const double lower = std::isinf(a) ? 0.0 : std::exp(eps * (a - x));
    return 0.5 * (std::exp(eps * (b - x)) - lower);
  }
  const double above = std::isinf(b) ? 0.0 : 0.5 * std::exp(-eps * (b - x));
  const double below = std::isinf(a) ? 0.0 : 0.5 * std::exp(eps * (a - x));
  return 1.0 - above - below;
}

// Two-sided geometric variate with P(d) proportional to e^{-eps |d|}: the
// difference of two independent geometric variables.
std::int64_t TwoSidedGeometric(Rng& rng, double eps) {
  const auto g1 = static_cast<std::int64_t>(std::floor(Exponential(rng) / eps));
  const auto g2 = static_cast<std::int64_t>(std::floor(Exponential(rng) / eps));
  return g1 - g2;
}

}  // namespace

Mechanism BuildIdentity(const Alphabet& alphabet) {
  const auto k = static_cast<Eigen::Index>(alphabet.size());
  return *Mechanism::FromMatrix(alphabet, alphabet,
                                Eigen::MatrixXd::Identity(k, k),
                                MechanismKind::kIdentity, 0.0);
}

absl::StatusOr<Mechanism> BuildKrr(const Alphabet& alphabet, double eps_ldp) {
  if (alphabet.size() < 2) {
    return absl::InvalidArgumentError(
        "AlphabetTooSmall: k-RR needs at least two values");
  }
  if (!(eps_ldp >= 0.0) || !std::isfinite(eps_ldp)) {
    return absl::InvalidArgumentError(
        absl::StrCat("local privacy parameter ", eps_ldp, " is invalid"));
  }
  const auto k = static_cast<Eigen::Index>(alphabet.size());
  const double e = std::exp(eps_ldp);
  const double denom = static_cast<double>(k - 1) + e;
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(k, k, 1.0 / denom);
  m.diagonal().setConstant(e / denom);
  return Mechanism::FromMatrix(alphabet, alphabet, std::move(m),
                               MechanismKind::kKrr, eps_ldp);
}

absl::StatusOr<Mechanism> BuildGeometricLinear(const Alphabet& input,
                                               double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  if (input.kind() != Alphabet::Kind::kLinear) {
    return absl::InvalidArgumentError(
        "geometric mechanism needs a linear input alphabet");
  }
  const double alpha = std::exp(-eps_geo);
  const double c = (1.0 - alpha) / (1.0 + alpha);
  std::vector<std::int64_t> values = input.values();
  auto kernel = [values, c, eps_geo](std::size_t x, const Report& z) {
    const double d = std::fabs(
        static_cast<double>(std::get<std::int64_t>(z) - values[x]));
    return c * std::exp(-eps_geo * d);
  };
  auto sampler = [values, eps_geo](std::size_t x, Rng& rng) -> Report {
    return values[x] + TwoSidedGeometric(rng, eps_geo);
  };
  return Mechanism::FromKernel(input, OutputDomain::kIntegerLine, 0,
                               std::move(kernel), std::move(sampler),
                               MechanismKind::kGeometricLinear, eps_geo);
}

absl::StatusOr<Mechanism> BuildTruncatedGeometric(std::int64_t r1,
                                                  std::int64_t r2,
                                                  double eps_geo) {
  if (r1 >= r2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "EmptyRange: truncation range [", r1, ", ", r2, "] needs r1 < r2"));
  }
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  absl::StatusOr<Alphabet> range = Alphabet::IntegerRange(r1, r2);
  if (!range.ok()) return range.status();
  const double alpha = std::exp(-eps_geo);
  const double edge = 1.0 / (1.0 + alpha);
  const double interior = (1.0 - alpha) / (1.0 + alpha);
  const auto k = static_cast<Eigen::Index>(r2 - r1 + 1);
  Eigen::MatrixXd m(k, k);
  for (Eigen::Index x = 0; x < k; ++x) {
    for (Eigen::Index z = 0; z < k; ++z) {
      const double cz = (z == 0 || z == k - 1) ? edge : interior;
      m(x, z) = cz * std::exp(-eps_geo * static_cast<double>(std::abs(z - x)));
    }
  }
  return Mechanism::FromMatrix(*range, *range, std::move(m),
                               MechanismKind::kTruncatedGeometric, eps_geo);
}

absl::StatusOr<Mechanism> BuildLaplaceLinearDiscretized(
    const Alphabet& alphabet, double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  if (alphabet.kind() != Alphabet::Kind::kLinear || !alphabet.IsContiguous()) {
    return absl::InvalidArgumentError(
        "NonContiguousAlphabet: Laplace binning needs a contiguous integer "
        "range");
  }
  const std::vector<std::int64_t>& v = alphabet.values();
  const auto k = static_cast<Eigen::Index>(v.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd m(k, k);
  for (Eigen::Index x = 0; x < k; ++x) {
    const double xv = static_cast<double>(v[x]);
    for (Eigen::Index z = 0; z < k; ++z) {
      const double a = z == 0 ? -kInf : static_cast<double>(v[z]) - 0.5;
      const double b = z == k - 1 ? kInf : static_cast<double>(v[z]) + 0.5;
      m(x, z) = LaplaceCellMass(xv, a, b, eps_geo);
    }
  }
  return Mechanism::FromMatrix(alphabet, alphabet, std::move(m),
                               MechanismKind::kLaplaceLinear, eps_geo);
}

absl::StatusOr<Mechanism> BuildExponential(const Alphabet& alphabet,
                                           const GroundMetric& metric,
                                           double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  const std::size_t k = alphabet.size();
  Eigen::MatrixXd d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) d(i, j) = metric(i, j);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) != 0.0) {
      return absl::InvalidArgumentError(
          "InvalidMetric: distance from an element to itself must be 0");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!(d(i, j) >= 0.0) || !std::isfinite(d(i, j)) ||
          std::fabs(d(i, j) - d(j, i)) > 1e-12 * std::max(1.0, d(i, j))) {
        return absl::InvalidArgumentError(
            "InvalidMetric: distances must be finite, non-negative and "
            "symmetric");
      }
    }
  }
  Eigen::MatrixXd m = (-0.5 * eps_geo * d.array()).exp().matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) /= m.row(i).sum();
  return Mechanism::FromMatrix(alphabet, alphabet, std::move(m),
                               MechanismKind::kExponential, eps_geo);
}

absl::StatusOr<Mechanism> BuildExponential(const Alphabet& alphabet,
                                           double eps_geo) {
  return BuildExponential(
      alphabet,
      [&alphabet](std::size_t i, std::size_t j) {
        return alphabet.Distance(i, j);
      },
      eps_geo);
}

ObservationSet ObfuscateIndices(const Mechanism& mech,
                                std::span<const std::size_t> data, Rng& rng) {
  std::map<Report, std::int64_t> counts;
  for (std::size_t x : data) ++counts[mech.Sample(x, rng)];
  return *ObservationSet::FromCounts(std::move(counts));
}

absl::StatusOr<ObservationSet> ObfuscateDataset(const Mechanism& mech,
                                                std::span<const Report> data,
                                                Rng& rng) {
  std::vector<std::size_t> indices;
  indices.reserve(data.size());
  for (const Report& r : data) {
    std::optional<std::size_t> i = mech.input().IndexOf(r);
    if (!i) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ElementOutsideAlphabet: '", EncodeReport(r),
          "' is not in the mechanism's input alphabet"));
    }
    indices.push_back(*i);
  }
  return ObfuscateIndices(mech, indices, rng);
}

nlohmann::json MechanismToJson(const Mechanism& mech) {
  nlohmann::json j = {{"kind", MechanismKindName(mech.kind())},
                      {"eps", mech.epsilon()},
                      {"input", AlphabetToJson(mech.input())}};
  if (mech.is_finite()) {
    j["output"] = AlphabetToJson(mech.output());
    nlohmann::json rows = nlohmann::json::array();
    const Eigen::MatrixXd& m = mech.matrix();
    for (Eigen::Index x = 0; x < m.rows(); ++x) {
      std::vector<double> row(static_cast<std::size_t>(m.cols()));
      for (Eigen::Index z = 0; z < m.cols(); ++z) row[z] = m(x, z);
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

absl::StatusOr<Mechanism> MechanismFromJson(const nlohmann::json& j) {
  try {
    absl::StatusOr<MechanismKind> kind =
        ParseMechanismKind(j.at("kind").get<std::string>());
    if (!kind.ok()) return kind.status();
    const double eps = j.value("eps", 0.0);
    absl::StatusOr<Alphabet> input = AlphabetFromJson(j.at("input"));
    if (!input.ok()) return input.status();
    if (j.contains("matrix")) {
      absl::StatusOr<Alphabet> output = AlphabetFromJson(j.at("output"));
      if (!output.ok()) return output.status();
      const nlohmann::json& rows = j.at("matrix");
      Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(output->size()));
      for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != output->size()) {
          return absl::InvalidArgumentError("ragged mechanism matrix");
        }
        for (std::size_t z = 0; z < rows[x].size(); ++z) {
          m(x, z) = rows[x][z].get<double>();
        }
      }
      return Mechanism::FromMatrix(*std::move(input), *std::move(output),
                                   std::move(m), *kind, eps);
    }
    switch (*kind) {
      case MechanismKind::kGeometricLinear:
        return BuildGeometricLinear(*input, eps);
      case MechanismKind::kRappor:
        return BuildRappor(*input, eps);
      case MechanismKind::kLaplacePlanarContinuous:
        return BuildLaplacePlanarContinuous(*input, eps);
      default:
        return absl::InvalidArgumentError(absl::StrCat(
            "mechanism kind '", MechanismKindName(*kind),
            "' needs an explicit matrix"));
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed mechanism JSON: ", e.what()));
  }
}

}  // namespace ldp
