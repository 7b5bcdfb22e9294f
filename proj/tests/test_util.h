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

#ifndef LDP_TESTS_TEST_UTIL_H_
#define LDP_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/mechanism.h"
#include "ldp/core/observation.h"
#include "ldp/core/random.h"

namespace ldp::testing {

inline Alphabet Labels123() { return *Alphabet::Categorical({"1", "2", "3"}); }

// The 3x3 mechanism whose likelihood for the single observation "2" is flat
// along the segment between (1,0,0) and (0,0,1).
inline Mechanism Eq3Mechanism() {
  Eigen::MatrixXd m(3, 3);
  m << 0.10, 0.45, 0.45,  //
      0.45, 0.10, 0.45,   //
      0.45, 0.45, 0.10;
  return *Mechanism::FromMatrix(Labels123(), Labels123(), m);
}

// The 3x3 mechanism with equal first and third rows: unique MLE (0,1,0) for
// observations {2,2,2,2} despite the likelihood not being strictly concave.
inline Mechanism Eq8Mechanism() {
  Eigen::MatrixXd m(3, 3);
  m << 0.45, 0.10, 0.45,  //
      0.05, 0.90, 0.05,   //
      0.45, 0.10, 0.45;
  return *Mechanism::FromMatrix(Labels123(), Labels123(), m);
}

inline ObservationSet LabelObs(std::initializer_list<const char*> labels) {
  std::vector<Report> reports;
  for (const char* l : labels) reports.emplace_back(std::string(l));
  return ObservationSet::FromReports(reports);
}

inline ObservationSet IntObs(std::initializer_list<std::int64_t> values) {
  std::vector<Report> reports;
  for (std::int64_t v : values) reports.emplace_back(v);
  return ObservationSet::FromReports(reports);
}

inline Eigen::MatrixXd RandomStochastic(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int x = 0; x < rows; ++x) {
    double sum = 0.0;
    for (int z = 0; z < cols; ++z) {
      m(x, z) = 0.02 + Uniform01(rng);
      sum += m(x, z);
    }
    m.row(x) /= sum;
  }
  return m;
}

inline Mechanism RandomMechanism(Rng& rng, int k, int m) {
  return *Mechanism::FromMatrix(*Alphabet::IntegerRange(0, k - 1),
                                *Alphabet::IntegerRange(0, m - 1),
                                RandomStochastic(rng, k, m));
}

inline Distribution RandomDistribution(Rng& rng, const Alphabet& alphabet) {
  return *Distribution::Create(alphabet,
                               UniformSimplexPoint(rng, alphabet.size()));
}

// n draws of x ~ theta pushed through the mechanism.
inline ObservationSet SampleObservations(const Mechanism& mech,
                                         const Distribution& theta,
                                         std::int64_t n, Rng& rng) {
  std::vector<double> cumulative;
  double acc = 0.0;
  for (double p : theta.probs()) cumulative.push_back(acc += p);
  std::vector<Report> reports;
  reports.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    reports.push_back(mech.Sample(SampleCumulative(rng, cumulative), rng));
  }
  return ObservationSet::FromReports(reports);
}

}  // namespace ldp::testing

#endif  // LDP_TESTS_TEST_UTIL_H_
