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

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/mechanisms/mechanisms.h"

namespace ldp {

double RapporKeepProbability(double eps_ldp) {
  return 1.0 / (1.0 + std::exp(-eps_ldp / 2.0));
}

absl::StatusOr<BitVector> RapporPerturb(const Alphabet& alphabet,
                                        std::size_t x, double eps_ldp,
                                        Rng& rng) {
  if (x >= alphabet.size()) {
    return absl::InvalidArgumentError(
        "ElementOutsideAlphabet: RAPPOR input outside the alphabet");
  }
  const double p = RapporKeepProbability(eps_ldp);
  BitVector out;
  out.bits.resize(alphabet.size());
  for (std::size_t y = 0; y < alphabet.size(); ++y) {
    const std::uint8_t encoded = y == x ? 1 : 0;
    out.bits[y] = Bernoulli(rng, p) ? encoded : 1 - encoded;
  }
  return out;
}

absl::StatusOr<double> RapporCondProb(const BitVector& beta, std::size_t x,
                                      double eps_ldp) {
  if (x >= beta.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "LengthMismatch: bit vector of length ", beta.size(),
        " has no position ", x));
  }
  const double p = RapporKeepProbability(eps_ldp);
  const double k = static_cast<double>(beta.size());
  const double s = static_cast<double>(beta.PopCount());
  const double log_prob =
      k * std::log(p) - (0.5 + 0.5 * s - beta.bits[x]) * eps_ldp;
  return std::exp(log_prob);
}

absl::StatusOr<Mechanism> BuildRappor(const Alphabet& alphabet,
                                      double eps_ldp) {
  if (!(eps_ldp > 0.0) || !std::isfinite(eps_ldp)) {
    return absl::InvalidArgumentError(
        absl::StrCat("RAPPOR parameter ", eps_ldp, " must be positive"));
  }
  const std::size_t k = alphabet.size();
  Alphabet input = alphabet;
  auto kernel = [eps_ldp](std::size_t x, const Report& z) {
    return *RapporCondProb(std::get<BitVector>(z), x, eps_ldp);
  };
  auto sampler = [input, eps_ldp](std::size_t x, Rng& rng) -> Report {
    return *RapporPerturb(input, x, eps_ldp, rng);
  };
  return Mechanism::FromKernel(alphabet, OutputDomain::kBitVectors, k,
                               std::move(kernel), std::move(sampler),
                               MechanismKind::kRappor, eps_ldp);
}

}  // namespace ldp
