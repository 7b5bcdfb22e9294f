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

#ifndef LDP_MECHANISMS_MECHANISMS_H_
#define LDP_MECHANISMS_MECHANISMS_H_

#include <cstdint>
#include <functional>
#include <span>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "ldp/core/alphabet.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"
#include "ldp/core/random.h"

namespace ldp {

// Reports the secret unchanged.
Mechanism BuildIdentity(const Alphabet& alphabet);

// k-ary randomized response: keeps x with probability
// e^eps / (k - 1 + e^eps), otherwise reports one of the other k - 1 values
// uniformly. eps = 0 gives the uniform mechanism.
absl::StatusOr<Mechanism> BuildKrr(const Alphabet& alphabet, double eps_ldp);

// The geometric mechanism on the integers,
//   M[x][z] = c e^{-eps |z - x|},  c = (1 - e^{-eps}) / (1 + e^{-eps}).
// `input` is the (finite, linear) set of secrets the rows range over; the
// output domain is the whole integer line.
absl::StatusOr<Mechanism> BuildGeometricLinear(const Alphabet& input,
                                               double eps_geo);

// The geometric mechanism restricted to outputs in [r1, r2], with inputs the
// same range. Boundary columns carry the folded tails:
//   c_z = 1 / (1 + e^{-eps})              for z in {r1, r2},
//   c_z = (1 - e^{-eps}) / (1 + e^{-eps}) for r1 < z < r2.
absl::StatusOr<Mechanism> BuildTruncatedGeometric(std::int64_t r1,
                                                  std::int64_t r2,
                                                  double eps_geo);

// Planar geometric noise e^{-eps d(x, s)} over the lattice of output cells,
// extended by rings of cells until a ring adds less than 1e-12 of a row's
// mass. Lattice cells outside `output_grid` are folded onto the nearest
// output cell. The output grid may be smaller than the input grid.
absl::StatusOr<Mechanism> BuildGeometricPlanar(const Alphabet& input_grid,
                                               const Alphabet& output_grid,
                                               double eps_geo);

// Laplace noise (eps/2) e^{-eps |t - x|} binned onto a contiguous integer
// alphabet: cell boundaries sit at midpoints and the two extreme cells absorb
// the tails. Entries are exact CDF differences.
absl::StatusOr<Mechanism> BuildLaplaceLinearDiscretized(const Alphabet& alphabet,
                                                        double eps_geo);

// Planar Laplace noise binned onto `grid`: each cell of the ring-extended
// lattice gets density (eps^2 / 2 pi) e^{-eps d} times the cell area at its
// centre, outside cells fold onto the nearest grid cell, and each row is
// renormalized.
absl::StatusOr<Mechanism> BuildLaplacePlanarDiscretized(const Alphabet& grid,
                                                        double eps_geo);

// Continuous planar Laplace noise: reports arbitrary points of the plane.
// The kernel is the density (eps^2 / 2 pi) e^{-eps d(x, z)}.
absl::StatusOr<Mechanism> BuildLaplacePlanarContinuous(const Alphabet& grid,
                                                       double eps_geo);

using GroundMetric = std::function<double(std::size_t, std::size_t)>;

// Exponential mechanism on a finite alphabet:
//   M[x][z] = e^{-eps d(x, z) / 2} / sum_z' e^{-eps d(x, z') / 2}.
// The metric must be symmetric, non-negative and zero on the diagonal.
absl::StatusOr<Mechanism> BuildExponential(const Alphabet& alphabet,
                                           const GroundMetric& metric,
                                           double eps_geo);
// Same, with the alphabet's own ground distance.
absl::StatusOr<Mechanism> BuildExponential(const Alphabet& alphabet,
                                           double eps_geo);

// Per-bit keep probability of basic one-time RAPPOR,
// p = e^{eps/2} / (1 + e^{eps/2}).
double RapporKeepProbability(double eps_ldp);

// One-hot encodes `x` and keeps each bit independently with probability p.
absl::StatusOr<BitVector> RapporPerturb(const Alphabet& alphabet,
                                        std::size_t x, double eps_ldp,
                                        Rng& rng);

// P(beta | x) = p^{|X|} e^{-(1/2 + S(beta)/2 - beta_x) eps}, S the number of
// set bits.
absl::StatusOr<double> RapporCondProb(const BitVector& beta, std::size_t x,
                                      double eps_ldp);

// Basic RAPPOR as a mechanism over bit vectors of length |X|.
absl::StatusOr<Mechanism> BuildRappor(const Alphabet& alphabet,
                                      double eps_ldp);

// One independent report per datum.
ObservationSet ObfuscateIndices(const Mechanism& mech,
                                std::span<const std::size_t> data, Rng& rng);
// ElementOutsideAlphabet when a datum is not in the mechanism's input.
absl::StatusOr<ObservationSet> ObfuscateDataset(const Mechanism& mech,
                                                std::span<const Report> data,
                                                Rng& rng);

// Finite mechanisms serialize their dense matrix; kernel mechanisms are
// rebuilt from kind, epsilon and input alphabet.
nlohmann::json MechanismToJson(const Mechanism& mech);
absl::StatusOr<Mechanism> MechanismFromJson(const nlohmann::json& j);

}  // namespace ldp

#endif  // LDP_MECHANISMS_MECHANISMS_H_
