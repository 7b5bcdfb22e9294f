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

#include "ldp/data_io/synthetic.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {
namespace {

constexpr std::int64_t kAgesMin = 17;
constexpr std::int64_t kAgesMax = 90;
constexpr double kAgesShape = 2.52;
constexpr double kAgesScale = 8.56;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string Describe(const SyntheticSpec& spec) {
  return std::visit(
      Overloaded{
          [](const BinomialSpec& b) {
            return absl::StrCat("binomial(k=", b.k, ",p=", b.p, ")");
          },
          [](const UniformOnSpec& u) {
            return absl::StrCat("uniform_on(", u.members.size(), " values)");
          },
          [](const ExplicitSpec&) { return std::string("explicit"); }},
      spec);
}

}  // namespace

absl::StatusOr<Distribution> SpecDistribution(const SyntheticSpec& spec) {
  return std::visit(
      Overloaded{
          [](const BinomialSpec& b) -> absl::StatusOr<Distribution> {
            if (b.k < 1 || !(b.p >= 0.0 && b.p <= 1.0)) {
              return absl::InvalidArgumentError(
                  "InvalidSpec: binomial needs k >= 1 and p in [0, 1]");
            }
            const int trials = b.k - 1;
            std::vector<double> pmf(static_cast<std::size_t>(b.k));
            for (int i = 0; i <= trials; ++i) {
              const double log_choose = std::lgamma(trials + 1.0) -
                                        std::lgamma(i + 1.0) -
                                        std::lgamma(trials - i + 1.0);
              const double a = i == 0 ? 1.0 : std::pow(b.p, i);
              const double c =
                  trials - i == 0 ? 1.0 : std::pow(1.0 - b.p, trials - i);
              pmf[static_cast<std::size_t>(i)] = std::exp(log_choose) * a * c;
            }
            return Distribution::Create(*Alphabet::IntegerRange(0, b.k - 1),
                                        std::move(pmf));
          },
          [](const UniformOnSpec& u) -> absl::StatusOr<Distribution> {
            std::vector<double> w(u.alphabet.size(), 0.0);
            for (std::size_t i : u.members) {
              if (i >= w.size()) {
                return absl::InvalidArgumentError(
                    "InvalidSpec: uniform member outside the alphabet");
              }
              w[i] = 1.0;
            }
            if (u.members.empty()) {
              return absl::InvalidArgumentError(
                  "InvalidSpec: uniform spec needs at least one member");
            }
            return Distribution::Create(u.alphabet, std::move(w));
          },
          [](const ExplicitSpec& e) -> absl::StatusOr<Distribution> {
            return e.distribution;
          }},
      spec);
}

Dataset SampleFromDistribution(const Distribution& theta, std::int64_t n,
                               Rng& rng) {
  std::vector<double> cumulative(theta.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    acc += theta[i];
    cumulative[i] = acc;
  }
  Dataset data{.alphabet = theta.alphabet()};
  data.indices.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  for (std::int64_t i = 0; i < n; ++i) {
    data.indices.push_back(SampleCumulative(rng, cumulative));
  }
  return data;
}

absl::StatusOr<Dataset> SampleSynthetic(const SyntheticSpec& spec,
                                        std::int64_t n, Rng& rng) {
  if (n < 1) {
    return absl::InvalidArgumentError("InvalidSpec: n must be >= 1");
  }
  absl::StatusOr<Distribution> theta = SpecDistribution(spec);
  if (!theta.ok()) return theta.status();
  Dataset data = SampleFromDistribution(*theta, n, rng);
  data.source = Describe(spec);
  return data;
}

Distribution AgesLikeDistribution() {
  std::vector<double> w(100, 0.0);
  for (std::int64_t age = kAgesMin; age <= kAgesMax; ++age) {
    const double t = static_cast<double>(age - kAgesMin) + 0.5;
    w[static_cast<std::size_t>(age)] =
        std::pow(t, kAgesShape - 1.0) * std::exp(-t / kAgesScale);
  }
  return *Distribution::Create(*Alphabet::IntegerRange(0, 99), std::move(w));
}

}  // namespace ldp
