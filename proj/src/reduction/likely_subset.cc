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

#include "ldp/reduction/likely_subset.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/core/json_io.h"
#include "ldp/core/obs_matrix.h"
#include "ldp/reduction/geometry.h"

namespace ldp {
namespace {

absl::Status EmptyObservations() {
  return absl::InvalidArgumentError(
      "EmptyObservations: a likely subset needs at least one observation");
}

absl::StatusOr<std::vector<double>> IntegerValues(const ObservationSet& obs) {
  std::vector<double> values;
  for (const auto& [z, count] : obs.counts()) {
    const auto* v = std::get_if<std::int64_t>(&z);
    if (v == nullptr) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: '", EncodeReport(z),
          "' is not an integer report"));
    }
    values.push_back(static_cast<double>(*v));
  }
  return values;
}

}  // namespace

absl::string_view LikelyConstructionName(LikelyConstruction construction) {
  switch (construction) {
    case LikelyConstruction::kLinearInterval:
      return "linear_interval";
    case LikelyConstruction::kPlanarHull:
      return "planar_hull";
    case LikelyConstruction::kKrrObserved:
      return "krr_observed";
    case LikelyConstruction::kExplicit:
      return "explicit";
  }
  return "explicit";
}

absl::StatusOr<LikelySubset> ExplicitSubset(Alphabet parent,
                                            std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.back() >= parent.size()) {
    return absl::InvalidArgumentError(
        "subset members must be non-empty and inside the alphabet");
  }
  return LikelySubset{.parent = std::move(parent),
                      .members = std::move(members),
                      .construction = LikelyConstruction::kExplicit};
}

absl::StatusOr<bool> IsUnlikely(const Mechanism& mech,
                                const ObservationSet& obs,
                                std::size_t x_prime, std::size_t x) {
  if (x_prime >= mech.input().size() || x >= mech.input().size()) {
    return absl::InvalidArgumentError(
        "ElementOutsideAlphabet: index beyond the input alphabet");
  }
  bool strict = false;
  for (const auto& [z, count] : obs.counts()) {
    absl::StatusOr<double> a = mech.Probability(x_prime, z);
    if (!a.ok()) return a.status();
    absl::StatusOr<double> b = mech.Probability(x, z);
    if (!b.ok()) return b.status();
    if (*a > *b) return false;
    if (*a < *b) strict = true;
  }
  return strict;
}

absl::StatusOr<bool> IsUnlikely(const Mechanism& mech,
                                const ObservationSet& obs,
                                const Report& x_prime, const Report& x) {
  const auto i = mech.input().IndexOf(x_prime);
  const auto j = mech.input().IndexOf(x);
  if (!i || !j) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ElementOutsideAlphabet: '", EncodeReport(i ? x : x_prime),
        "' is not in the input alphabet"));
  }
  return IsUnlikely(mech, obs, *i, *j);
}

absl::StatusOr<LikelySubset> LikelyLinear(const Alphabet& alphabet,
                                          std::span<const double> obs) {
  if (alphabet.kind() != Alphabet::Kind::kLinear) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: the interval construction needs a linear alphabet");
  }
  if (obs.empty()) return EmptyObservations();
  const auto [lo_it, hi_it] = std::minmax_element(obs.begin(), obs.end());
  const double z_lo = *lo_it;
  const double z_hi = *hi_it;
  const auto& values = alphabet.values();

  std::int64_t x_min = values.front();
  for (std::int64_t v : values) {
    if (static_cast<double>(v) <= z_lo) x_min = v;
  }
  std::int64_t x_max = values.back();
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (static_cast<double>(*it) >= z_hi) x_max = *it;
  }
  LikelySubset subset{.parent = alphabet,
                      .construction = LikelyConstruction::kLinearInterval,
                      .x_min = x_min,
                      .x_max = x_max};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= x_min && values[i] <= x_max) subset.members.push_back(i);
  }
  return subset;
}

absl::StatusOr<LikelySubset> LikelyLinear(const Alphabet& alphabet,
                                          const ObservationSet& obs) {
  absl::StatusOr<std::vector<double>> values = IntegerValues(obs);
  if (!values.ok()) return values.status();
  return LikelyLinear(alphabet, *values);
}

absl::StatusOr<LikelySubset> LikelyIntegerLine(std::span<const double> obs) {
  if (obs.empty()) return EmptyObservations();
  const auto [lo_it, hi_it] = std::minmax_element(obs.begin(), obs.end());
  const auto x_min = static_cast<std::int64_t>(std::floor(*lo_it));
  const auto x_max = static_cast<std::int64_t>(std::ceil(*hi_it));
  absl::StatusOr<Alphabet> window = Alphabet::IntegerRange(x_min, x_max);
  if (!window.ok()) return window.status();
  LikelySubset subset{.parent = *window,
                      .construction = LikelyConstruction::kLinearInterval,
                      .x_min = x_min,
                      .x_max = x_max};
  for (std::size_t i = 0; i < window->size(); ++i) subset.members.push_back(i);
  return subset;
}

absl::StatusOr<LikelySubset> LikelyIntegerLine(const ObservationSet& obs) {
  absl::StatusOr<std::vector<double>> values = IntegerValues(obs);
  if (!values.ok()) return values.status();
  return LikelyIntegerLine(*values);
}

absl::StatusOr<LikelySubset> LikelyPlanar(const Alphabet& grid,
                                          std::span<const PlanarPoint> obs) {
  if (grid.kind() != Alphabet::Kind::kPlanar) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: the hull construction needs a planar alphabet");
  }
  if (obs.empty()) return EmptyObservations();
  LikelySubset subset{.parent = grid,
                      .construction = LikelyConstruction::kPlanarHull};
  subset.hull = ConvexHull(obs);
  const double d_max = Diameter(subset.hull);
  subset.delta = grid.cell_width_km() / std::numbers::sqrt2;
  subset.delta_prime =
      std::sqrt(subset.delta * subset.delta + 2.0 * subset.delta * d_max);
  const auto& centers = grid.centers();
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (DistanceToConvexPolygon(centers[i], subset.hull) <=
        subset.delta_prime * (1.0 + 1e-12)) {
      subset.members.push_back(i);
    }
  }
  if (subset.members.empty()) {
    return absl::InvalidArgumentError(
        "EmptyObservations: no grid cell lies near the observations");
  }
  return subset;
}

absl::StatusOr<LikelySubset> LikelyPlanar(const Alphabet& grid,
                                          const ObservationSet& obs) {
  std::vector<PlanarPoint> points;
  for (const auto& [z, count] : obs.counts()) {
    const auto* p = std::get_if<PlanarPoint>(&z);
    if (p == nullptr) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: '", EncodeReport(z),
          "' is not a planar report"));
    }
    points.push_back(*p);
  }
  return LikelyPlanar(grid, points);
}

absl::StatusOr<LikelySubset> LikelyKrr(const Alphabet& alphabet,
                                       const ObservationSet& obs) {
  if (obs.empty()) return EmptyObservations();
  std::set<std::size_t> members;
  for (const auto& [z, count] : obs.counts()) {
    const auto index = alphabet.IndexOf(z);
    if (!index) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ObservationOutsideDomain: '", EncodeReport(z),
          "' is not in the alphabet"));
    }
    members.insert(*index);
  }
  return LikelySubset{
      .parent = alphabet,
      .members = std::vector<std::size_t>(members.begin(), members.end()),
      .construction = LikelyConstruction::kKrrObserved};
}

absl::StatusOr<Distribution> ZeroExtend(const LikelySubset& subset,
                                        const Distribution& restricted) {
  if (restricted.size() != subset.members.size()) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: estimate does not match the subset size");
  }
  std::vector<double> full(subset.parent.size(), 0.0);
  for (std::size_t i = 0; i < subset.members.size(); ++i) {
    full[subset.members[i]] = restricted[i];
  }
  return Distribution::Create(subset.parent, std::move(full));
}

absl::StatusOr<LiftedEstimate> RestrictAndLift(const Mechanism& mech,
                                               const ObservationSet& obs,
                                               const LikelySubset& subset,
                                               const IbuOptions& options) {
  if (!(subset.parent == mech.input())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: subset parent is not the mechanism input");
  }
  absl::StatusOr<ObsMatrix> full = ObsMatrix::Build(mech, obs);
  if (!full.ok()) return full.status();
  absl::StatusOr<ObsMatrix> restricted = full->RestrictRows(subset.members);
  if (!restricted.ok()) return restricted.status();
  absl::StatusOr<IbuResult> result = Ibu(*restricted, options);
  if (!result.ok()) return result.status();
  absl::StatusOr<Distribution> lifted = ZeroExtend(subset, result->estimate);
  if (!lifted.ok()) return lifted.status();
  return LiftedEstimate{.estimate = *std::move(lifted),
                        .restricted = *std::move(result)};
}

nlohmann::json LikelySubsetToJson(const LikelySubset& subset) {
  nlohmann::json j = {
      {"construction", LikelyConstructionName(subset.construction)},
      {"parent", AlphabetToJson(subset.parent)},
      {"members", subset.members},
  };
  if (subset.x_min) j["x_min"] = *subset.x_min;
  if (subset.x_max) j["x_max"] = *subset.x_max;
  if (subset.construction == LikelyConstruction::kPlanarHull) {
    j["delta"] = subset.delta;
    j["delta_prime"] = subset.delta_prime;
    nlohmann::json hull = nlohmann::json::array();
    for (const PlanarPoint& p : subset.hull) hull.push_back({p.x_km, p.y_km});
    j["hull"] = std::move(hull);
  }
  return j;
}

}  // namespace ldp
