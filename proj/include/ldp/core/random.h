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

#ifndef LDP_CORE_RANDOM_H_
#define LDP_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ldp {

// The random stream type taken by every sampler. std::mt19937_64 has a fully
// specified output sequence, and the conversions below avoid the
// implementation-defined std distributions, so a seed reproduces the same
// samples on every platform.
using Rng = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// Stream for replication `index` of an experiment seeded with `master_seed`:
// seeded with SplitMix64(master_seed ^ SplitMix64(index + 1)).
Rng DeriveStream(std::uint64_t master_seed, std::uint64_t index);

// Uniform on [0, 1) with 53 random bits.
double Uniform01(Rng& rng);
// Uniform on (0, 1].
double UniformOpen01(Rng& rng);
// Uniform integer in [0, n).
std::uint64_t UniformIndex(Rng& rng, std::uint64_t n);
bool Bernoulli(Rng& rng, double p);
// Standard exponential variate.
double Exponential(Rng& rng);

// Index drawn with probability proportional to the entries of `cumulative`,
// which holds running sums ending at the total mass.
std::size_t SampleCumulative(Rng& rng, std::span<const double> cumulative);

// A point drawn from the flat Dirichlet distribution on k elements, i.e.
// uniformly from the simplex. Every entry is strictly positive.
std::vector<double> UniformSimplexPoint(Rng& rng, std::size_t k);

}  // namespace ldp

#endif  // LDP_CORE_RANDOM_H_
