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

#ifndef LDP_REDUCTION_GEOMETRY_H_
#define LDP_REDUCTION_GEOMETRY_H_

#include <span>
#include <vector>

#include "ldp/core/report.h"

namespace ldp {

// Convex hull by Andrew's monotone chain, counter-clockwise, without
// repeated or collinear vertices. Degenerate inputs give one vertex (all
// points equal) or two (all points collinear).
std::vector<PlanarPoint> ConvexHull(std::span<const PlanarPoint> points);

double PointSegmentDistance(const PlanarPoint& p, const PlanarPoint& a,
                            const PlanarPoint& b);

// Euclidean distance from p to the convex polygon with the given
// counter-clockwise vertices; 0 for points inside or on the boundary.
double DistanceToConvexPolygon(const PlanarPoint& p,
                               std::span<const PlanarPoint> hull);

// Largest pairwise distance among the points (0 for fewer than two).
double Diameter(std::span<const PlanarPoint> points);

}  // namespace ldp

#endif  // LDP_REDUCTION_GEOMETRY_H_
