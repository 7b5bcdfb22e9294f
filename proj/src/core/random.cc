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

#include "ldp/core/random.h"

#include <algorithm>
#include <cmath>

namespace ldp {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng DeriveStream(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(SplitMix64(master_seed ^ SplitMix64(index + 1)));
}

double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double UniformOpen01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= limit) return r % n;
  }
}

bool Bernoulli(Rng& rng, double p) { return Uniform01(rng) < p; }

double Exponential(Rng& rng) { return -std::log(UniformOpen01(rng)); }

std::size_t SampleCumulative(Rng& rng, std::span<const double> cumulative) {
  const double u = Uniform01(rng) * cumulative.back();
  // upper_bound never lands on a zero-mass entry.
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

std::vector<double> UniformSimplexPoint(Rng& rng, std::size_t k) {
  std::vector<double> out(k);
  double sum = 0.0;
  for (double& v : out) {
    v = Exponential(rng);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace ldp
