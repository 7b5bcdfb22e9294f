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

#ifndef LDP_DATA_IO_SYNTHETIC_H_
#define LDP_DATA_IO_SYNTHETIC_H_

#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/distribution.h"
#include "ldp/core/random.h"
#include "ldp/data_io/dataset.h"

namespace ldp {

// Binomial with k - 1 trials over {0, ..., k - 1}.
struct BinomialSpec {
  int k = 0;
  double p = 0.5;
};

// Uniform over the listed members of an alphabet.
struct UniformOnSpec {
  Alphabet alphabet;
  std::vector<std::size_t> members;
};

struct ExplicitSpec {
  Distribution distribution;
};

using SyntheticSpec = std::variant<BinomialSpec, UniformOnSpec, ExplicitSpec>;

// The distribution a spec samples from. InvalidSpec on bad parameters.
absl::StatusOr<Distribution> SpecDistribution(const SyntheticSpec& spec);

// n i.i.d. draws.
absl::StatusOr<Dataset> SampleSynthetic(const SyntheticSpec& spec,
                                        std::int64_t n, Rng& rng);

Dataset SampleFromDistribution(const Distribution& theta, std::int64_t n,
                               Rng& rng);

// A smooth stand-in for an adult census age profile on {0, ..., 99}: zero
// below 17 and above 90, in between a discretized Gamma bump shifted to
// start at 17 with mode 30 and mean about 38.6.
Distribution AgesLikeDistribution();

}  // namespace ldp

#endif  // LDP_DATA_IO_SYNTHETIC_H_
