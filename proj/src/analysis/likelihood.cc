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

#include "ldp/analysis/likelihood.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "ldp/kernels/kernels.h"

namespace ldp {

double LogLikelihood(const ObsMatrix& g, std::span<const double> phi) {
  double loglik = 0.0;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    const double mix = kernels::Dot(phi, g.column(j));
    if (!(mix > 0.0)) return -std::numeric_limits<double>::infinity();
    loglik += g.weights()[j] * std::log(mix);
  }
  return loglik;
}

absl::StatusOr<double> LogLikelihood(const ObsMatrix& g,
                                     const Distribution& phi) {
  if (!(phi.alphabet() == g.input())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: distribution is not over the observation matrix "
        "rows");
  }
  return LogLikelihood(g, phi.probs());
}

}  // namespace ldp
