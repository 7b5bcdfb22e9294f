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

#ifndef LDP_REDUCTION_LIKELY_SUBSET_H_
#define LDP_REDUCTION_LIKELY_SUBSET_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"
#include "ldp/estimators/ibu.h"

namespace ldp {

enum class LikelyConstruction {
  kLinearInterval,
  kPlanarHull,
  kKrrObserved,
  kExplicit,
};

absl::string_view LikelyConstructionName(LikelyConstruction construction);

// A sub-alphabet outside of which every maximum-likelihood estimate puts
// zero mass. `members` are strictly increasing indices into `parent`.
struct LikelySubset {
  Alphabet parent;
  std::vector<std::size_t> members;
  LikelyConstruction construction = LikelyConstruction::kExplicit;

  // Linear interval end points.
  std::optional<std::int64_t> x_min;
  std::optional<std::int64_t> x_max;
  // Planar construction: covering radius, enlarged radius, and the hull of
  // the observations.
  double delta = 0.0;
  double delta_prime = 0.0;
  std::vector<PlanarPoint> hull;

  absl::StatusOr<Alphabet> Restricted() const {
    return parent.Subset(members);
  }
};

absl::StatusOr<LikelySubset> ExplicitSubset(Alphabet parent,
                                            std::vector<std::size_t> members);

// x' is unlikely with respect to x when M[x'][z] <= M[x][z] for every
// observed z, strictly for at least one. Compares kernel values exactly.
absl::StatusOr<bool> IsUnlikely(const Mechanism& mech,
                                const ObservationSet& obs,
                                std::size_t x_prime, std::size_t x);
absl::StatusOr<bool> IsUnlikely(const Mechanism& mech,
                                const ObservationSet& obs,
                                const Report& x_prime, const Report& x);

// [x_min, x_max] intersected with a finite linear alphabet, where x_min is
// the largest element not above any observation and x_max the smallest not
// below any. Missing ends clamp to the alphabet extremes.
absl::StatusOr<LikelySubset> LikelyLinear(const Alphabet& alphabet,
                                          std::span<const double> obs);
absl::StatusOr<LikelySubset> LikelyLinear(const Alphabet& alphabet,
                                          const ObservationSet& obs);

// The same construction for the whole integer line: the result's parent is
// the window [floor(min z), ceil(max z)] and every element is a member.
absl::StatusOr<LikelySubset> LikelyIntegerLine(std::span<const double> obs);
absl::StatusOr<LikelySubset> LikelyIntegerLine(const ObservationSet& obs);

// Grid cells within delta' of the convex hull B of the observations, where
// delta = cell_width / sqrt(2) and delta' = sqrt(delta^2 + 2 delta d_max)
// with d_max the largest distance between two observations.
absl::StatusOr<LikelySubset> LikelyPlanar(const Alphabet& grid,
                                          std::span<const PlanarPoint> obs);
absl::StatusOr<LikelySubset> LikelyPlanar(const Alphabet& grid,
                                          const ObservationSet& obs);

// Under k-RR the observed values form a likely subset.
absl::StatusOr<LikelySubset> LikelyKrr(const Alphabet& alphabet,
                                       const ObservationSet& obs);

struct LiftedEstimate {
  // Over the mechanism's full input alphabet, zero outside the subset.
  Distribution estimate;
  // IBU diagnostics of the run on the restricted alphabet.
  IbuResult restricted;
};

// Runs IBU on the rows of the subset only and extends the result by zeros.
absl::StatusOr<LiftedEstimate> RestrictAndLift(const Mechanism& mech,
                                               const ObservationSet& obs,
                                               const LikelySubset& subset,
                                               const IbuOptions& options = {});

// Zero-extends a distribution over subset.Restricted() to subset.parent.
absl::StatusOr<Distribution> ZeroExtend(const LikelySubset& subset,
                                        const Distribution& restricted);

nlohmann::json LikelySubsetToJson(const LikelySubset& subset);

}  // namespace ldp

#endif  // LDP_REDUCTION_LIKELY_SUBSET_H_
