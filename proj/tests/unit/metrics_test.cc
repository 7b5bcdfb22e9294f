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
#include <limits>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/random.h"
#include "ldp/metrics/distances.h"
#include "ldp/metrics/emd.h"
#include "test_util.h"

namespace ldp {
namespace {

using ::testing::HasSubstr;

Distribution Make(const Alphabet& ab, std::vector<double> w) {
  return *Distribution::Create(ab, std::move(w));
}

// Optimal transport cost by cycle canceling: start from the north-west
// corner plan and cancel negative residual cycles (found by Bellman-Ford)
// until none remains.
double CycleCancelingOracle(const std::vector<double>& supply,
                            const std::vector<double>& demand,
                            const Eigen::MatrixXd& cost) {
  const int m = static_cast<int>(supply.size());
  const int n = static_cast<int>(demand.size());
  Eigen::MatrixXd plan = Eigen::MatrixXd::Zero(m, n);
  {
    std::vector<double> s = supply;
    std::vector<double> d = demand;
    int i = 0;
    int j = 0;
    while (i < m && j < n) {
      const double f = std::min(s[i], d[j]);
      plan(i, j) += f;
      s[i] -= f;
      d[j] -= f;
      if (s[i] <= 1e-15) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  const int v = m + n;
  for (int round = 0; round < 10000; ++round) {
    struct Arc {
      int from, to;
      double w;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        arcs.push_back({i, m + j, cost(i, j)});
        if (plan(i, j) > 1e-15) arcs.push_back({m + j, i, -cost(i, j)});
      }
    }
    std::vector<double> dist(v, 0.0);
    std::vector<int> pred(v, -1);
    int last = -1;
    for (int it = 0; it < v; ++it) {
      last = -1;
      for (const Arc& a : arcs) {
        if (dist[a.from] + a.w < dist[a.to] - 1e-13) {
          dist[a.to] = dist[a.from] + a.w;
          pred[a.to] = a.from;
          last = a.to;
        }
      }
      if (last < 0) break;
    }
    if (last < 0) break;
    int x = last;
    for (int k = 0; k < v; ++k) x = pred[x];
    std::vector<int> cycle = {x};
    for (int y = pred[x]; y != x; y = pred[y]) cycle.push_back(y);
    std::reverse(cycle.begin(), cycle.end());
    double bottleneck = std::numeric_limits<double>::infinity();
    const int len = static_cast<int>(cycle.size());
    for (int k = 0; k < len; ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % len];
      if (a >= m) bottleneck = std::min(bottleneck, plan(b, a - m));
    }
    for (int k = 0; k < len; ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % len];
      if (a < m) {
        plan(a, b - m) += bottleneck;
      } else {
        plan(b, a - m) -= bottleneck;
      }
    }
  }
  return (plan.array() * cost.array()).sum();
}

Eigen::MatrixXd GridCost(const Alphabet& grid) {
  const std::size_t k = grid.size();
  Eigen::MatrixXd c(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) c(i, j) = grid.Distance(i, j);
  }
  return c;
}

TEST(TotalVariationTest, Examples) {
  const Alphabet ab = *Alphabet::Categorical({"a", "b", "c"});
  const Distribution p = Make(ab, {0.2, 0.3, 0.5});
  EXPECT_EQ(*TotalVariation(p, p), 0.0);
  EXPECT_DOUBLE_EQ(*TotalVariation(Make(ab, {1, 0, 0}), Make(ab, {0, 0, 1})),
                   1.0);
  EXPECT_NEAR(*TotalVariation(p, Make(ab, {0.5, 0.3, 0.2})), 0.3, 1e-15);
  const std::vector<double> a = {0.5, 0.5};
  const std::vector<double> b = {1.0};
  EXPECT_THAT(TotalVariation(a, b).status().message(),
              HasSubstr("LengthMismatch"));
  EXPECT_THAT(TotalVariation(p, Distribution::Uniform(
                                    *Alphabet::Categorical({"a", "b"})))
                  .status()
                  .message(),
              HasSubstr("AlphabetMismatch"));
}

TEST(SquaredErrorTest, Examples) {
  const Alphabet ab = *Alphabet::Categorical({"a", "b"});
  const std::vector<double> v = {1.5, -0.5};
  EXPECT_NEAR(*SquaredError(v, Make(ab, {1, 0})), 0.5, 1e-15);
  const std::vector<double> same = {0.3, 0.7};
  EXPECT_EQ(*SquaredError(same, Make(ab, {0.3, 0.7})), 0.0);
  const std::vector<double> shorter = {1.0};
  EXPECT_THAT(SquaredError(shorter, Make(ab, {1, 0})).status().message(),
              HasSubstr("LengthMismatch"));
}

TEST(Emd1dTest, Examples) {
  const Alphabet ab = *Alphabet::IntegerRange(0, 1);
  const Distribution p = Make(ab, {0.8, 0.2});
  EXPECT_EQ(*Emd1d(p, p), 0.0);
  EXPECT_NEAR(*Emd1d(Make(ab, {1, 0}), Make(ab, {0, 1})), 1.0, 1e-15);
  EXPECT_NEAR(*Emd1d(p, Make(ab, {0.5, 0.5})), 0.3, 1e-15);
  const Alphabet gaps = *Alphabet::Linear({0, 2, 7});
  EXPECT_NEAR(*Emd1d(Make(gaps, {1, 0, 0}), Make(gaps, {0, 0, 1})), 7.0, 1e-15);
  EXPECT_THAT(Emd1d(p, Distribution::Uniform(*Alphabet::IntegerRange(0, 2)))
                  .status()
                  .message(),
              HasSubstr("AlphabetMismatch"));
}

TEST(EmdPlanarTest, Examples) {
  const Alphabet g = *Alphabet::PlanarGrid({0.25, 0.25}, 2, 1, 0.5);
  const Distribution p = Make(g, {0.7, 0.3});
  EXPECT_NEAR(*EmdPlanar(p, p), 0.0, 1e-15);
  EXPECT_NEAR(*EmdPlanar(Make(g, {1, 0}), Make(g, {0, 1})), 0.5, 1e-12);
  EXPECT_NEAR(*EmdPlanar(p, Make(g, {0.3, 0.7})), 0.2, 1e-12);
}

TEST(EmdPlanarTest, MatchesCycleCancelingOracle) {
  Rng rng = DeriveStream(51, 0);
  for (int cols = 1; cols <= 3; ++cols) {
    for (int rows = 1; rows <= 3; ++rows) {
      if (cols * rows < 2) continue;
      const Alphabet g = *Alphabet::PlanarGrid({0.5, 0.5}, cols, rows, 1.0);
      const Eigen::MatrixXd cost = GridCost(g);
      for (int t = 0; t < 20; ++t) {
        const auto a = UniformSimplexPoint(rng, g.size());
        const auto b = UniformSimplexPoint(rng, g.size());
        const double oracle = CycleCancelingOracle(a, b, cost);
        EXPECT_NEAR(*EmdPlanar(Make(g, a), Make(g, b)), oracle, 1e-9)
            << cols << "x" << rows;
      }
    }
  }
}

TEST(EmdPlanarTest, SingleRowMatchesLine) {
  Rng rng = DeriveStream(52, 0);
  const Alphabet g = *Alphabet::PlanarGrid({0.5, 0.5}, 6, 3, 1.0);
  const Alphabet line = *Alphabet::IntegerRange(0, 5);
  for (int t = 0; t < 20; ++t) {
    const auto a = UniformSimplexPoint(rng, 6);
    const auto b = UniformSimplexPoint(rng, 6);
    std::vector<double> pa(18, 0.0);
    std::vector<double> pb(18, 0.0);
    for (int i = 0; i < 6; ++i) {
      pa[6 + i] = a[i];
      pb[6 + i] = b[i];
    }
    EXPECT_NEAR(*EmdPlanar(Make(g, pa), Make(g, pb)),
                *Emd1d(Make(line, a), Make(line, b)), 1e-9);
  }
}

TEST(EmdPlanarTest, MetricProperties) {
  Rng rng = DeriveStream(53, 0);
  const Alphabet g = *Alphabet::PlanarGrid({0.25, 0.25}, 5, 4, 0.5);
  for (int t = 0; t < 20; ++t) {
    const Distribution a = testing::RandomDistribution(rng, g);
    const Distribution b = testing::RandomDistribution(rng, g);
    const Distribution c = testing::RandomDistribution(rng, g);
    const double ab = *EmdPlanar(a, b);
    const double ba = *EmdPlanar(b, a);
    EXPECT_GE(ab, 0.0);
    EXPECT_NEAR(ab, ba, 1e-9);
    EXPECT_LE(ab, *EmdPlanar(a, c) + *EmdPlanar(c, b) + 1e-9);
  }
}

TEST(EmdPlanarTest, SubsetAlphabetsUseCellCenters) {
  const Alphabet g = *Alphabet::PlanarGrid({0.5, 0.5}, 3, 3, 1.0);
  const Alphabet corners = *g.Subset({0, 8});
  EXPECT_NEAR(*EmdPlanar(Make(corners, {1, 0}), Make(corners, {0, 1})),
              2 * std::sqrt(2.0), 1e-12);
}

TEST(Emd1dTest, MetricProperties) {
  Rng rng = DeriveStream(54, 0);
  const Alphabet ab = *Alphabet::Linear({-4, -1, 0, 3, 10, 11});
  for (int t = 0; t < 100; ++t) {
    const Distribution a = testing::RandomDistribution(rng, ab);
    const Distribution b = testing::RandomDistribution(rng, ab);
    const Distribution c = testing::RandomDistribution(rng, ab);
    EXPECT_NEAR(*Emd1d(a, b), *Emd1d(b, a), 1e-12);
    EXPECT_LE(*Emd1d(a, b), *Emd1d(a, c) + *Emd1d(c, b) + 1e-9);
    EXPECT_NEAR(*Emd1d(a, b),
                CycleCancelingOracle(
                    std::vector<double>(a.probs().begin(), a.probs().end()),
                    std::vector<double>(b.probs().begin(), b.probs().end()),
                    [&] {
                      Eigen::MatrixXd c(6, 6);
                      for (int i = 0; i < 6; ++i) {
                        for (int j = 0; j < 6; ++j) c(i, j) = ab.Distance(i, j);
                      }
                      return c;
                    }()),
                1e-9);
  }
}

TEST(SolveTransportTest, CertifiesOptimality) {
  Rng rng = DeriveStream(55, 0);
  for (int t = 0; t < 20; ++t) {
    const int m = 2 + static_cast<int>(UniformIndex(rng, 5));
    const int n = 2 + static_cast<int>(UniformIndex(rng, 5));
    const auto s = UniformSimplexPoint(rng, m);
    const auto d = UniformSimplexPoint(rng, n);
    Eigen::MatrixXd cost(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) cost(i, j) = 5 * Uniform01(rng);
    }
    auto sol = SolveTransport(s, d, cost);
    ASSERT_TRUE(sol.ok());
    EXPECT_LT(sol->certificate_residual, kTransportCertificateTolerance);
    EXPECT_NEAR(sol->cost, CycleCancelingOracle(s, d, cost), 1e-9);
    for (int i = 0; i < m; ++i) EXPECT_NEAR(sol->plan.row(i).sum(), s[i], 1e-12);
    for (int j = 0; j < n; ++j) EXPECT_NEAR(sol->plan.col(j).sum(), d[j], 1e-12);
    EXPECT_GE(sol->plan.minCoeff(), 0.0);
  }
}

TEST(EmdTest, DispatchesOnAlphabetKind) {
  const Alphabet cat = *Alphabet::Categorical({"a", "b", "c"});
  const Distribution p = Make(cat, {0.6, 0.4, 0});
  const Distribution q = Make(cat, {0, 0.4, 0.6});
  EXPECT_NEAR(*Emd(p, q), *TotalVariation(p, q), 1e-15);
  const Alphabet line = *Alphabet::IntegerRange(0, 2);
  EXPECT_NEAR(*Emd(Make(line, {0.6, 0.4, 0}), Make(line, {0, 0.4, 0.6})), 1.2,
              1e-12);
  const Alphabet g = *Alphabet::PlanarGrid({0.5, 0.5}, 3, 1, 1.0);
  EXPECT_NEAR(*Emd(Make(g, {0.6, 0.4, 0}), Make(g, {0, 0.4, 0.6})), 1.2, 1e-12);
}

}  // namespace
}  // namespace ldp
