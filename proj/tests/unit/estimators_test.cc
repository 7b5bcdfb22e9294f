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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldp/analysis/concavity.h"
#include "ldp/analysis/likelihood.h"
#include "ldp/analysis/mle_oracle.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/obs_matrix.h"
#include "ldp/core/observation.h"
#include "ldp/estimators/ibu.h"
#include "ldp/estimators/inversion.h"
#include "ldp/estimators/rappor_decode.h"
#include "ldp/mechanisms/mechanisms.h"
#include "ldp/metrics/distances.h"
#include "test_util.h"

namespace ldp {
namespace {

using ::testing::HasSubstr;

Alphabet Ab() { return *Alphabet::Categorical({"a", "b"}); }

Mechanism Symmetric2x2() {
  Eigen::MatrixXd m(2, 2);
  m << 0.75, 0.25, 0.25, 0.75;
  return *Mechanism::FromMatrix(Ab(), Ab(), m);
}

// One textbook EM step written directly from the update rule.
std::vector<double> OracleStep(const ObsMatrix& g, std::vector<double> theta) {
  const std::size_t k = g.rows();
  std::vector<double> next(k, 0.0);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double denom = 0.0;
    for (std::size_t u = 0; u < k; ++u) denom += theta[u] * g.matrix()(u, j);
    const double q = g.weights()[j] / g.total_weight();
    for (std::size_t x = 0; x < k; ++x) {
      next[x] += q * theta[x] * g.matrix()(x, j) / denom;
    }
  }
  return next;
}

TEST(IbuTest, IdentityCopiesFrequencies) {
  auto g = ObsMatrix::Build(BuildIdentity(Ab()),
                            testing::LabelObs({"a", "a", "a", "b", "a", "a",
                                               "b", "a", "a", "b"}));
  ASSERT_TRUE(g.ok());
  auto r = Ibu(*g);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r->estimate[0], 0.7, 1e-15);
  EXPECT_NEAR(r->estimate[1], 0.3, 1e-15);
  EXPECT_LE(r->iterations, 2);
  EXPECT_TRUE(r->converged);
}

TEST(IbuTest, SymmetricTwoByTwo) {
  auto g = ObsMatrix::Build(Symmetric2x2(),
                            testing::LabelObs({"a", "a", "a", "b"}));
  ASSERT_TRUE(g.ok());
  IbuOptions one;
  one.max_iter = 1;
  auto step = Ibu(*g, one);
  ASSERT_TRUE(step.ok());
  EXPECT_NEAR(step->estimate[0], 0.625, 1e-15);
  EXPECT_NEAR(step->estimate[1], 0.375, 1e-15);
  EXPECT_FALSE(step->converged);
  // The limit sits on the boundary and the approach is sublinear, so keep
  // restarting from the last iterate until a million update steps are done.
  IbuOptions chunk;
  chunk.delta = 1e-300;
  chunk.max_iter = 100000;
  chunk.record_trace = false;
  Distribution theta = Distribution::Uniform(Ab());
  int total = 0;
  while (total < 1000000) {
    auto r = Ibu(*g, theta, chunk);
    ASSERT_TRUE(r.ok());
    theta = r->estimate;
    total += r->iterations;
  }
  EXPECT_NEAR(theta[0], 1.0, 1e-6);
  EXPECT_NEAR(theta[1], 0.0, 1e-6);
}

TEST(IbuTest, UniqueMleWithoutStrictConcavity) {
  auto g = ObsMatrix::Build(testing::Eq8Mechanism(),
                            testing::LabelObs({"2", "2", "2", "2"}));
  ASSERT_TRUE(g.ok());
  Rng rng = DeriveStream(31, 0);
  for (int s = 0; s < 5; ++s) {
    const Distribution start =
        testing::RandomDistribution(rng, testing::Labels123());
    auto r = Ibu(*g, start);
    ASSERT_TRUE(r.ok());
    EXPECT_NEAR(r->estimate[0], 0.0, 1e-6);
    EXPECT_NEAR(r->estimate[1], 1.0, 1e-6);
    EXPECT_NEAR(r->estimate[2], 0.0, 1e-6);
  }
}

TEST(IbuTest, ContractErrors) {
  auto g = ObsMatrix::Build(Symmetric2x2(), testing::LabelObs({"a"}));
  ASSERT_TRUE(g.ok());
  EXPECT_THAT(Ibu(*g, *Distribution::Create(Ab(), {1.0, 0.0})).status().message(),
              HasSubstr("ZeroSupportStart"));
  Eigen::MatrixXd dead(2, 2);
  dead << 0.5, 0.0, 0.5, 0.0;
  auto d = ObsMatrix::FromColumns(Ab(), dead, {1.0, 1.0});
  ASSERT_TRUE(d.ok());
  EXPECT_THAT(Ibu(*d).status().message(), HasSubstr("DeadColumn"));
}

TEST(IbuTest, MaxIterReportsNonConvergence) {
  auto g = ObsMatrix::Build(Symmetric2x2(),
                            testing::LabelObs({"a", "a", "a", "b"}));
  IbuOptions opts;
  opts.max_iter = 3;
  auto r = Ibu(*g, opts);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->converged);
  EXPECT_EQ(r->iterations, 3);
  EXPECT_EQ(r->loglik_trace.size(), 4u);
}

TEST(IbuTest, IteratesMatchTextbookUpdate) {
  Rng rng = DeriveStream(32, 0);
  for (int t = 0; t < 20; ++t) {
    const Mechanism m = testing::RandomMechanism(rng, 4, 7);
    const Distribution theta =
        testing::RandomDistribution(rng, m.input());
    auto g = ObsMatrix::Build(m, testing::SampleObservations(m, theta, 60, rng));
    ASSERT_TRUE(g.ok());
    std::vector<double> expected(4, 0.25);
    for (int step = 1; step <= 5; ++step) {
      expected = OracleStep(*g, expected);
      IbuOptions opts;
      opts.max_iter = step;
      opts.delta = 1e-300;
      auto r = Ibu(*g, opts);
      ASSERT_TRUE(r.ok());
      for (std::size_t x = 0; x < 4; ++x) {
        EXPECT_NEAR(r->estimate[x], expected[x], 1e-12);
      }
    }
  }
}

TEST(IbuTest, MonotoneTraceAndConservedMass) {
  Rng rng = DeriveStream(33, 0);
  for (int t = 0; t < 30; ++t) {
    const int k = 2 + static_cast<int>(UniformIndex(rng, 5));
    const Mechanism m = testing::RandomMechanism(rng, k, k + 2);
    const Distribution theta = testing::RandomDistribution(rng, m.input());
    auto g = ObsMatrix::Build(m, testing::SampleObservations(m, theta, 100, rng));
    ASSERT_TRUE(g.ok());
    auto r = Ibu(*g);
    ASSERT_TRUE(r.ok());
    for (std::size_t i = 1; i < r->loglik_trace.size(); ++i) {
      EXPECT_GE(r->loglik_trace[i], r->loglik_trace[i - 1] - 1e-9);
    }
    const auto p = r->estimate.probs();
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
    if (r->converged && r->loglik_trace.size() >= 2) {
      const auto n = r->loglik_trace.size();
      EXPECT_LT(std::abs(r->loglik_trace[n - 1] - r->loglik_trace[n - 2]),
                IbuOptions{}.delta);
    }
    EXPECT_NEAR(r->loglik_trace.back(), LogLikelihood(*g, p), 1e-9);
  }
}

TEST(IbuTest, NoWorseThanGridOracle) {
  Rng rng = DeriveStream(34, 0);
  for (int t = 0; t < 10; ++t) {
    const int k = 2 + static_cast<int>(UniformIndex(rng, 3));
    const Mechanism m = testing::RandomMechanism(rng, k, k + 1);
    const Distribution theta = testing::RandomDistribution(rng, m.input());
    auto g = ObsMatrix::Build(m, testing::SampleObservations(m, theta, 200, rng));
    ASSERT_TRUE(g.ok());
    auto r = Ibu(*g);
    auto oracle = MleOracle(*g);
    ASSERT_TRUE(r.ok() && oracle.ok());
    EXPECT_GE(LogLikelihood(*g, r->estimate.probs()),
              LogLikelihood(*g, oracle->probs()) - 1e-6);
  }
}

TEST(IbuTest, StrictConcavityGivesStartIndependentEstimate) {
  Rng rng = DeriveStream(35, 0);
  int checked = 0;
  for (int t = 0; t < 10; ++t) {
    const Mechanism m = testing::RandomMechanism(rng, 3, 5);
    const Distribution theta = testing::RandomDistribution(rng, m.input());
    auto g = ObsMatrix::Build(m, testing::SampleObservations(m, theta, 300, rng));
    ASSERT_TRUE(g.ok());
    if (!StrictConcavityCheck(*g).strictly_concave) continue;
    ++checked;
    IbuOptions opts;
    opts.delta = 1e-14;
    opts.record_trace = false;
    std::vector<Distribution> estimates;
    for (int s = 0; s < 10; ++s) {
      auto r = Ibu(*g, testing::RandomDistribution(rng, m.input()), opts);
      ASSERT_TRUE(r.ok());
      estimates.push_back(r->estimate);
    }
    for (std::size_t a = 0; a < estimates.size(); ++a) {
      for (std::size_t b = a + 1; b < estimates.size(); ++b) {
        EXPECT_LE(*TotalVariation(estimates[a], estimates[b]), 1e-4);
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(IbuTest, ResultJsonCarriesTrace) {
  auto g = ObsMatrix::Build(Symmetric2x2(), testing::LabelObs({"a", "b"}));
  auto r = Ibu(*g);
  ASSERT_TRUE(r.ok());
  const auto j = IbuResultToJson(*r);
  EXPECT_EQ(j["iterations"], r->iterations);
  EXPECT_EQ(j["converged"], r->converged);
  EXPECT_EQ(j["loglik"].size(), r->loglik_trace.size());
}

Empirical Freqs(std::vector<const char*> labels, std::vector<double> f) {
  Empirical e;
  for (const char* l : labels) e.values.emplace_back(std::string(l));
  e.freqs = std::move(f);
  return e;
}

TEST(InversionTest, RawExamples) {
  auto v1 = InvRaw(Freqs({"a", "b"}, {0.75, 0.25}), Symmetric2x2());
  ASSERT_TRUE(v1.ok());
  EXPECT_NEAR((*v1)[0], 1.0, 1e-14);
  EXPECT_NEAR((*v1)[1], 0.0, 1e-14);
  auto v2 = InvRaw(Freqs({"a"}, {1.0}), Symmetric2x2());
  ASSERT_TRUE(v2.ok());
  EXPECT_NEAR((*v2)[0], 1.5, 1e-14);
  EXPECT_NEAR((*v2)[1], -0.5, 1e-14);
  auto v3 = InvRaw(Freqs({"a", "b"}, {0.4, 0.6}), BuildIdentity(Ab()));
  ASSERT_TRUE(v3.ok());
  EXPECT_DOUBLE_EQ((*v3)[0], 0.4);
}

TEST(InversionTest, RawErrors) {
  Eigen::MatrixXd rect(2, 3);
  rect << 0.5, 0.25, 0.25, 0.25, 0.5, 0.25;
  auto nonsq = *Mechanism::FromMatrix(Ab(), *Alphabet::Categorical({"a", "b", "c"}),
                                      rect);
  EXPECT_THAT(InvRaw(Freqs({"a"}, {1.0}), nonsq).status().message(),
              HasSubstr("NonSquareMechanism"));
  Eigen::MatrixXd sing(2, 2);
  sing << 0.5, 0.5, 0.5, 0.5;
  auto singular = *Mechanism::FromMatrix(Ab(), Ab(), sing);
  EXPECT_THAT(InvRaw(Freqs({"a"}, {1.0}), singular).status().message(),
              HasSubstr("SingularMechanism"));
}

TEST(InversionTest, RawIsExactInverseOfPushForward) {
  Rng rng = DeriveStream(36, 0);
  for (int t = 0; t < 20; ++t) {
    const Mechanism m = testing::RandomMechanism(rng, 5, 5);
    const Distribution theta = testing::RandomDistribution(rng, m.input());
    Empirical q;
    for (int z = 0; z < 5; ++z) {
      q.values.emplace_back(std::int64_t{z});
      double s = 0.0;
      for (int x = 0; x < 5; ++x) s += theta[x] * m.matrix()(x, z);
      q.freqs.push_back(s);
    }
    auto v = InvRaw(q, m);
    ASSERT_TRUE(v.ok());
    for (int x = 0; x < 5; ++x) EXPECT_NEAR((*v)[x], theta[x], 1e-9);
  }
}

TEST(InversionTest, Normalize) {
  const std::vector<double> a = {1.5, -0.5};
  auto d = InvNormalize(a, Ab());
  ASSERT_TRUE(d.ok());
  EXPECT_DOUBLE_EQ((*d)[0], 1.0);
  EXPECT_DOUBLE_EQ((*d)[1], 0.0);
  const std::vector<double> b = {0.5, 0.5};
  EXPECT_DOUBLE_EQ((*InvNormalize(b, Ab()))[1], 0.5);
  const std::vector<double> c = {-1.0, -2.0};
  EXPECT_THAT(InvNormalize(c, Ab()).status().message(),
              HasSubstr("AllNonPositive"));
}

TEST(InversionTest, ProjectExamples) {
  const std::vector<double> a = {1.2, -0.2};
  auto pa = ProjectOntoSimplex(a);
  EXPECT_NEAR(pa[0], 1.0, 1e-15);
  EXPECT_NEAR(pa[1], 0.0, 1e-15);
  const std::vector<double> b = {0.5, 0.5, 0.5};
  for (double p : ProjectOntoSimplex(b)) EXPECT_NEAR(p, 1.0 / 3.0, 1e-15);
  const std::vector<double> c = {0.2, 0.3, 0.5};
  auto pc = ProjectOntoSimplex(c);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(pc[i], c[i], 1e-15);
}

// The projection is max(v - tau, 0) for the tau that makes it sum to one;
// find tau by bisection.
std::vector<double> BisectionProjection(const std::vector<double>& v) {
  double lo = *std::min_element(v.begin(), v.end()) - 1.0;
  double hi = *std::max_element(v.begin(), v.end());
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    double s = 0.0;
    for (double x : v) s += std::max(x - mid, 0.0);
    (s > 1.0 ? lo : hi) = mid;
  }
  std::vector<double> out;
  for (double x : v) out.push_back(std::max(x - 0.5 * (lo + hi), 0.0));
  return out;
}

TEST(InversionTest, ProjectionIsNearestDistribution) {
  Rng rng = DeriveStream(37, 0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = 2 + UniformIndex(rng, 6);
    std::vector<double> v(k);
    for (double& x : v) x = 3.0 * Uniform01(rng) - 1.0;
    const std::vector<double> p = ProjectOntoSimplex(v);
    const std::vector<double> oracle = BisectionProjection(v);
    auto dist = [&](const std::vector<double>& d) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += (d[i] - v[i]) * (d[i] - v[i]);
      return std::sqrt(s);
    };
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(p[i], oracle[i], 1e-12);
    for (int s = 0; s < 100; ++s) {
      EXPECT_LE(dist(p), dist(UniformSimplexPoint(rng, k)) + 1e-12);
    }
    const std::vector<double> again = ProjectOntoSimplex(p);
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(again[i], p[i], 1e-15);
  }
}

TEST(RapporDecodeTest, Examples) {
  const double eps = 2 * std::log(3.0);
  const std::vector<std::int64_t> counts = {25, 25};
  auto raw = RapporUnbiasedCounts(counts, 100, eps);
  ASSERT_TRUE(raw.ok());
  EXPECT_NEAR((*raw)[0], 0.0, 1e-15);
  EXPECT_NEAR((*raw)[1], 0.0, 1e-15);
  auto d = RapporDecode(counts, 100, eps, PostProcess::kProject, Ab());
  ASSERT_TRUE(d.ok());
  EXPECT_NEAR((*d)[0], 0.5, 1e-15);
  const std::vector<std::int64_t> sharp = {70, 30};
  auto high = RapporUnbiasedCounts(sharp, 100, 80.0);
  ASSERT_TRUE(high.ok());
  EXPECT_NEAR((*high)[0], 0.7, 1e-12);
  EXPECT_THAT(RapporUnbiasedCounts(sharp, 100, 0.0).status().message(),
              HasSubstr("DegenerateP"));
  const std::vector<std::int64_t> over = {101, 0};
  EXPECT_FALSE(RapporUnbiasedCounts(over, 100, 1.0).ok());
}

TEST(RapporDecodeTest, BitFrequenciesMatchExpectation) {
  const Alphabet ab = *Alphabet::IntegerRange(0, 3);
  const double eps = 1.5;
  const double p = RapporKeepProbability(eps);
  const std::vector<double> theta = {0.1, 0.2, 0.3, 0.4};
  auto mech = BuildRappor(ab, eps);
  ASSERT_TRUE(mech.ok());
  Rng rng = DeriveStream(38, 0);
  const auto obs = testing::SampleObservations(
      *mech, *Distribution::Create(ab, theta), 100000, rng);
  auto counts = RapporBitCounts(obs, 4);
  ASSERT_TRUE(counts.ok());
  for (int y = 0; y < 4; ++y) {
    const double e = p * theta[y] + (1 - p) * (1 - theta[y]);
    EXPECT_NEAR((*counts)[y] / 1e5, e, 4 * std::sqrt(e * (1 - e) / 1e5));
  }
  auto est = RapporDecode(*counts, obs.n(), eps, PostProcess::kNormalize, ab);
  ASSERT_TRUE(est.ok());
  for (int y = 0; y < 4; ++y) EXPECT_NEAR((*est)[y], theta[y], 0.03);
}

}  // namespace
}  // namespace ldp
