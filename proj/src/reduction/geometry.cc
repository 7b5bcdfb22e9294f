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

#include "ldp/reduction/geometry.h"

#include <algorithm>
#include <cmath>

namespace ldp {
namespace {

double Cross(const PlanarPoint& o, const PlanarPoint& a,
             const PlanarPoint& b) {
  return (a.x_km - o.x_km) * (b.y_km - o.y_km) -
         (a.y_km - o.y_km) * (b.x_km - o.x_km);
}

}  // namespace

std::vector<PlanarPoint> ConvexHull(std::span<const PlanarPoint> points) {
  std::vector<PlanarPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<PlanarPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const PlanarPoint& p : pts) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double PointSegmentDistance(const PlanarPoint& p, const PlanarPoint& a,
                            const PlanarPoint& b) {
  const double dx = b.x_km - a.x_km;
  const double dy = b.y_km - a.y_km;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x_km - a.x_km) * dx + (p.y_km - a.y_km) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  return EuclideanDistance(p, {a.x_km + t * dx, a.y_km + t * dy});
}

double DistanceToConvexPolygon(const PlanarPoint& p,
                               std::span<const PlanarPoint> hull) {
  if (hull.empty()) return 0.0;
  if (hull.size() == 1) return EuclideanDistance(p, hull[0]);
  if (hull.size() == 2) return PointSegmentDistance(p, hull[0], hull[1]);
  bool inside = true;
  double best = PointSegmentDistance(p, hull.back(), hull.front());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const PlanarPoint& a = hull[i];
    const PlanarPoint& b = hull[(i + 1) % hull.size()];
    if (Cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, PointSegmentDistance(p, a, b));
  }
  return inside ? 0.0 : best;
}

double Diameter(std::span<const PlanarPoint> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, EuclideanDistance(points[i], points[j]));
    }
  }
  return best;
}

}  // namespace ldp
