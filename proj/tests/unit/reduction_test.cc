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
#include <numbers>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldp/analysis/likelihood.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/obs_matrix.h"
#include "ldp/core/observation.h"
#include "ldp/estimators/ibu.h"
#include "ldp/mechanisms/mechanisms.h"
#include "ldp/reduction/geometry.h"
#include "ldp/reduction/likely_subset.h"
#include "test_util.h"

namespace ldp {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

double Cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x_km - o.x_km) * (b.y_km - o.y_km) -
         (a.y_km - o.y_km) * (b.x_km - o.x_km);
}

std::vector<PlanarPoint> RandomPoints(Rng& rng, int n, double scale) {
  std::vector<PlanarPoint> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back({scale * Uniform01(rng), scale * Uniform01(rng)});
  }
  return pts;
}

TEST(GeometryTest, HullContainsAllPointsCounterClockwise) {
  Rng rng = DeriveStream(61, 0);
  for (int t = 0; t < 100; ++t) {
    const auto pts = RandomPoints(rng, 3 + static_cast<int>(UniformIndex(rng, 30)), 5.0);
    const auto hull = ConvexHull(pts);
    ASSERT_GE(hull.size(), 3u);
    for (const PlanarPoint& v : hull) {
      EXPECT_NE(std::find(pts.begin(), pts.end(), v), pts.end());
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const PlanarPoint& a = hull[i];
      const PlanarPoint& b = hull[(i + 1) % hull.size()];
      for (const PlanarPoint& p : pts) EXPECT_GE(Cross(a, b, p), -1e-12);
    }
  }
}

TEST(GeometryTest, DegenerateHulls) {
  const std::vector<PlanarPoint> one = {{1, 1}, {1, 1}};
  EXPECT_EQ(ConvexHull(one).size(), 1u);
  const std::vector<PlanarPoint> line = {{0, 0}, {1, 1}, {2, 2}, {0.5, 0.5}};
  const auto seg = ConvexHull(line);
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_NEAR(DistanceToConvexPolygon({2, 0}, seg), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(DistanceToConvexPolygon({3, 3}, seg), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(DistanceToConvexPolygon({4, 1}, ConvexHull(one)),
              std::sqrt(9.0), 1e-12);
}

TEST(GeometryTest, PolygonDistanceMatchesSampledBoundary) {
  Rng rng = DeriveStream(62, 0);
  for (int t = 0; t < 50; ++t) {
    const auto hull = ConvexHull(RandomPoints(rng, 8, 4.0));
    for (int s = 0; s < 20; ++s) {
      const PlanarPoint p{8 * Uniform01(rng) - 2, 8 * Uniform01(rng) - 2};
      bool inside = hull.size() >= 3;
      double best = 1e300;
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const PlanarPoint& a = hull[i];
        const PlanarPoint& b = hull[(i + 1) % hull.size()];
        inside = inside && Cross(a, b, p) >= 0;
        for (int k = 0; k <= 2000; ++k) {
          const double u = k / 2000.0;
          const PlanarPoint q{a.x_km + u * (b.x_km - a.x_km),
                              a.y_km + u * (b.y_km - a.y_km)};
          best = std::min(best, EuclideanDistance(p, q));
        }
      }
      const double d = DistanceToConvexPolygon(p, hull);
      if (inside) {
        EXPECT_EQ(d, 0.0);
      } else {
        EXPECT_NEAR(d, best, 5e-3);
        EXPECT_LE(d, best + 1e-12);
      }
    }
  }
}

TEST(GeometryTest, DiameterIsMaxPairwiseDistance) {
  Rng rng = DeriveStream(63, 0);
  for (int t = 0; t < 50; ++t) {
    const auto pts = RandomPoints(rng, 12, 3.0);
    double best = 0.0;
    for (const auto& a : pts) {
      for (const auto& b : pts) best = std::max(best, EuclideanDistance(a, b));
    }
    EXPECT_NEAR(Diameter(pts), best, 1e-12);
  }
}

TEST(IsUnlikelyTest, Examples) {
  const Alphabet ab = *Alphabet::IntegerRange(0, 9);
  auto geo = BuildGeometricLinear(ab, 0.5);
  ASSERT_TRUE(geo.ok());
  const ObservationSet obs = testing::IntObs({0, 4});
  EXPECT_TRUE(*IsUnlikely(*geo, obs, 7, 4));
  EXPECT_FALSE(*IsUnlikely(*geo, obs, 4, 4));
  EXPECT_FALSE(*IsUnlikely(*geo, obs, 2, 7));
  EXPECT_THAT(IsUnlikely(*geo, obs, 10, 4).status().message(),
              HasSubstr("ElementOutsideAlphabet"));
  const Alphabet cat = *Alphabet::Categorical({"a", "b", "c"});
  const Mechanism id = BuildIdentity(cat);
  const ObservationSet a = testing::LabelObs({"a"});
  EXPECT_FALSE(*IsUnlikely(id, a, Report(std::string("a")),
                           Report(std::string("b"))));
  EXPECT_TRUE(*IsUnlikely(id, a, Report(std::string("b")),
                          Report(std::string("a"))));
}

TEST(LikelyLinearTest, Examples) {
  const std::vector<double> obs = {0.5, 4.0};
  auto line = LikelyIntegerLine(obs);
  ASSERT_TRUE(line.ok());
  EXPECT_EQ(*line->x_min, 0);
  EXPECT_EQ(*line->x_max, 4);
  EXPECT_THAT(line->Restricted()->values(), ElementsAre(0, 1, 2, 3, 4));
  const Alphabet ab = *Alphabet::IntegerRange(-5, 5);
  auto single = LikelyLinear(ab, testing::IntObs({2, 2}));
  ASSERT_TRUE(single.ok());
  EXPECT_THAT(single->Restricted()->values(), ElementsAre(2));
  auto all = LikelyLinear(ab, testing::IntObs({-5, 5}));
  ASSERT_TRUE(all.ok());
  EXPECT_EQ(all->members.size(), ab.size());
  auto outside = LikelyLinear(ab, testing::IntObs({-20, 1}));
  ASSERT_TRUE(outside.ok());
  EXPECT_EQ(*outside->x_min, -5);
  EXPECT_EQ(*outside->x_max, 1);
  EXPECT_THAT(LikelyLinear(ab, ObservationSet()).status().message(),
              HasSubstr("EmptyObservations"));
  const std::vector<double> gaps_obs = {1.0, 6.0};
  auto gaps = LikelyLinear(*Alphabet::Linear({0, 3, 5, 8}), gaps_obs);
  ASSERT_TRUE(gaps.ok());
  EXPECT_THAT(gaps->Restricted()->values(), ElementsAre(0, 3, 5, 8));
}

TEST(LikelyLinearTest, ExcludedElementsAreUnlikelyAndIntervalGrows) {
  Rng rng = DeriveStream(64, 0);
  const Alphabet ab = *Alphabet::IntegerRange(-30, 30);
  for (int t = 0; t < 100; ++t) {
    auto mech = BuildGeometricLinear(ab, 0.1 + Uniform01(rng));
    ASSERT_TRUE(mech.ok());
    std::vector<Report> reports;
    const int n = 1 + static_cast<int>(UniformIndex(rng, 8));
    for (int i = 0; i < n; ++i) {
      reports.emplace_back(static_cast<std::int64_t>(UniformIndex(rng, 41)) - 20);
    }
    const ObservationSet obs = ObservationSet::FromReports(reports);
    auto subset = LikelyLinear(ab, obs);
    ASSERT_TRUE(subset.ok());
    const std::size_t lo = *ab.IndexOf(Report(*subset->x_min));
    const std::size_t hi = *ab.IndexOf(Report(*subset->x_max));
    for (std::size_t x = 0; x < ab.size(); ++x) {
      if (x < lo) EXPECT_TRUE(*IsUnlikely(*mech, obs, x, lo));
      if (x > hi) EXPECT_TRUE(*IsUnlikely(*mech, obs, x, hi));
    }
    reports.emplace_back(static_cast<std::int64_t>(UniformIndex(rng, 41)) - 20);
    auto grown = LikelyLinear(ab, ObservationSet::FromReports(reports));
    ASSERT_TRUE(grown.ok());
    EXPECT_LE(*grown->x_min, *subset->x_min);
    EXPECT_GE(*grown->x_max, *subset->x_max);
  }
}

TEST(LikelyPlanarTest, EnlargementRadius) {
  const Alphabet grid = *Alphabet::PlanarGrid({0.15, 0.15}, 40, 10, 0.3);
  const std::vector<PlanarPoint> obs = {{1.0, 1.0}, {9.25, 1.0}};
  auto subset = LikelyPlanar(grid, obs);
  ASSERT_TRUE(subset.ok());
  const double delta = 0.3 / std::numbers::sqrt2;
  EXPECT_NEAR(subset->delta, delta, 1e-15);
  EXPECT_NEAR(subset->delta_prime,
              std::sqrt(delta * delta + 2 * delta * 8.25), 1e-12);
  EXPECT_NEAR(subset->delta_prime, 1.88287, 1e-5);
}

TEST(LikelyPlanarTest, SingleObservationGivesDisk) {
  const Alphabet grid = *Alphabet::PlanarGrid({0.5, 0.5}, 5, 5, 1.0);
  const std::vector<PlanarPoint> obs = {{2.5, 2.5}};
  auto subset = LikelyPlanar(grid, obs);
  ASSERT_TRUE(subset.ok());
  EXPECT_NEAR(subset->delta_prime, 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_THAT(subset->members, ElementsAre(12));
  const std::vector<PlanarPoint> corner = {{2.0, 2.0}};
  auto four = LikelyPlanar(grid, corner);
  ASSERT_TRUE(four.ok());
  EXPECT_THAT(four->members, ElementsAre(6, 7, 11, 12));
}

TEST(LikelyPlanarTest, CornerObservationsCoverGrid) {
  const Alphabet grid = *Alphabet::PlanarGrid({0.5, 0.5}, 6, 4, 1.0);
  const std::vector<PlanarPoint> obs = {{0.5, 0.5}, {5.5, 0.5}, {0.5, 3.5},
                                        {5.5, 3.5}};
  auto subset = LikelyPlanar(grid, obs);
  ASSERT_TRUE(subset.ok());
  EXPECT_EQ(subset->members.size(), grid.size());
}

TEST(LikelyPlanarTest, ExcludedCellsAreUnlikely) {
  Rng rng = DeriveStream(65, 0);
  const Alphabet grid = *Alphabet::PlanarGrid({0.25, 0.25}, 20, 20, 0.5);
  int excluded_total = 0;
  for (int t = 0; t < 100; ++t) {
    auto mech = BuildLaplacePlanarContinuous(grid, 0.5 + 2 * Uniform01(rng));
    ASSERT_TRUE(mech.ok());
    std::vector<Report> reports;
    const int n = 1 + static_cast<int>(UniformIndex(rng, 5));
    const double ox = 2 + 4 * Uniform01(rng);
    const double oy = 2 + 4 * Uniform01(rng);
    for (int i = 0; i < n; ++i) {
      reports.emplace_back(
          PlanarPoint{ox + 2 * Uniform01(rng), oy + 2 * Uniform01(rng)});
    }
    const ObservationSet obs = ObservationSet::FromReports(reports);
    auto subset = LikelyPlanar(grid, obs);
    ASSERT_TRUE(subset.ok());
    std::vector<bool> kept(grid.size(), false);
    for (std::size_t m : subset->members) kept[m] = true;
    for (std::size_t x = 0; x < grid.size(); ++x) {
      if (kept[x]) continue;
      ++excluded_total;
      bool witnessed = false;
      for (std::size_t m : subset->members) {
        if (*IsUnlikely(*mech, obs, x, m)) {
          witnessed = true;
          break;
        }
      }
      EXPECT_TRUE(witnessed) << "cell " << x;
    }
  }
  EXPECT_GT(excluded_total, 0);
}

TEST(LikelyKrrTest, Examples) {
  const Alphabet ab = *Alphabet::IntegerRange(1, 100);
  auto s = LikelyKrr(ab, testing::IntObs({3, 7, 7, 42}));
  ASSERT_TRUE(s.ok());
  EXPECT_THAT(s->Restricted()->values(), ElementsAre(3, 7, 42));
  const Alphabet small = *Alphabet::IntegerRange(1, 3);
  EXPECT_EQ(LikelyKrr(small, testing::IntObs({1, 2, 3}))->members.size(), 3u);
  EXPECT_EQ(LikelyKrr(small, testing::IntObs({2, 2, 2}))->members.size(), 1u);
  EXPECT_THAT(LikelyKrr(ab, ObservationSet()).status().message(),
              HasSubstr("EmptyObservations"));
}

TEST(LikelyKrrTest, ExcludedElementsAreUnlikelyAndSubsetGrows) {
  Rng rng = DeriveStream(66, 0);
  const Alphabet ab = *Alphabet::IntegerRange(0, 19);
  for (int t = 0; t < 100; ++t) {
    auto mech = BuildKrr(ab, 0.2 + 3 * Uniform01(rng));
    ASSERT_TRUE(mech.ok());
    std::vector<Report> reports;
    const int n = 1 + static_cast<int>(UniformIndex(rng, 10));
    for (int i = 0; i < n; ++i) {
      reports.emplace_back(static_cast<std::int64_t>(UniformIndex(rng, 20)));
    }
    const ObservationSet obs = ObservationSet::FromReports(reports);
    auto subset = LikelyKrr(ab, obs);
    ASSERT_TRUE(subset.ok());
    const std::size_t witness = subset->members.front();
    for (std::size_t x = 0; x < ab.size(); ++x) {
      if (std::find(subset->members.begin(), subset->members.end(), x) ==
          subset->members.end()) {
        EXPECT_TRUE(*IsUnlikely(*mech, obs, x, witness));
      }
    }
    reports.emplace_back(static_cast<std::int64_t>(UniformIndex(rng, 20)));
    auto grown = LikelyKrr(ab, ObservationSet::FromReports(reports));
    EXPECT_TRUE(std::includes(grown->members.begin(), grown->members.end(),
                              subset->members.begin(), subset->members.end()));
  }
}

TEST(RestrictAndLiftTest, FullSubsetEqualsPlainIbu) {
  Rng rng = DeriveStream(67, 0);
  const Mechanism m = testing::RandomMechanism(rng, 4, 5);
  const ObservationSet obs = testing::SampleObservations(
      m, testing::RandomDistribution(rng, m.input()), 80, rng);
  auto subset = ExplicitSubset(m.input(), {0, 1, 2, 3});
  ASSERT_TRUE(subset.ok());
  auto lifted = RestrictAndLift(m, obs, *subset);
  auto plain = Ibu(*ObsMatrix::Build(m, obs));
  ASSERT_TRUE(lifted.ok() && plain.ok());
  for (std::size_t x = 0; x < 4; ++x) {
    EXPECT_EQ(lifted->estimate[x], plain->estimate[x]);
  }
}

TEST(RestrictAndLiftTest, ConcentratedKrrGivesPointMass) {
  const Alphabet ab = *Alphabet::IntegerRange(0, 9);
  auto mech = BuildKrr(ab, 8.0);
  const ObservationSet obs = testing::IntObs({4, 4, 4, 4, 4});
  auto subset = LikelyKrr(ab, obs);
  auto lifted = RestrictAndLift(*mech, obs, *subset);
  ASSERT_TRUE(lifted.ok());
  EXPECT_DOUBLE_EQ(lifted->estimate[4], 1.0);
  EXPECT_EQ(lifted->estimate.SupportSize(), 1u);
}

TEST(RestrictAndLiftTest, IntegerLineMatchesWideWindow) {
  const Alphabet window = *Alphabet::IntegerRange(-50, 54);
  auto mech = BuildGeometricLinear(window, 0.7);
  ASSERT_TRUE(mech.ok());
  const ObservationSet obs = testing::IntObs({0, 1, 1, 2, 4, 4, 3, 0});
  auto subset = LikelyLinear(window, obs);
  ASSERT_TRUE(subset.ok());
  EXPECT_EQ(subset->members.size(), 5u);
  auto lifted = RestrictAndLift(*mech, obs, *subset);
  ASSERT_TRUE(lifted.ok());
  const ObsMatrix g = *ObsMatrix::Build(*mech, obs);
  auto wide = Ibu(g);
  ASSERT_TRUE(wide.ok());
  EXPECT_NEAR(*LogLikelihood(g, lifted->estimate),
              *LogLikelihood(g, wide->estimate), 1e-6);
}

TEST(RestrictAndLiftTest, LiftedEstimateIsGlobalMle) {
  Rng rng = DeriveStream(68, 0);
  const Alphabet ab = *Alphabet::IntegerRange(0, 14);
  auto mech = BuildKrr(ab, 2.0);
  const ObservationSet obs = testing::IntObs({1, 1, 5, 9, 9, 9, 12});
  auto lifted = RestrictAndLift(*mech, obs, *LikelyKrr(ab, obs));
  ASSERT_TRUE(lifted.ok());
  const ObsMatrix g = *ObsMatrix::Build(*mech, obs);
  const double best = *LogLikelihood(g, lifted->estimate);
  for (int t = 0; t < 100; ++t) {
    EXPECT_GE(best, *LogLikelihood(g, testing::RandomDistribution(rng, ab)) - 1e-6);
  }
}

TEST(LikelySubsetJsonTest, PlanarMetadata) {
  const Alphabet grid = *Alphabet::PlanarGrid({0.5, 0.5}, 4, 4, 1.0);
  const std::vector<PlanarPoint> obs = {{1, 1}, {3, 1}, {2, 3}};
  const auto j = LikelySubsetToJson(*LikelyPlanar(grid, obs));
  EXPECT_EQ(j["construction"], "planar_hull");
  EXPECT_EQ(j["hull"].size(), 3u);
  EXPECT_TRUE(j.contains("delta_prime"));
  EXPECT_TRUE(j.contains("members"));
}

}  // namespace
}  // namespace ldp
