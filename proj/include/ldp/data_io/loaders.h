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

#ifndef LDP_DATA_IO_LOADERS_H_
#define LDP_DATA_IO_LOADERS_H_

#include <string>

#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/report.h"
#include "ldp/data_io/dataset.h"

namespace ldp {

inline constexpr std::int64_t kMaxAge = 99;
// Share of malformed rows tolerated before a load fails.
inline constexpr double kMalformedRowThreshold = 0.01;

// Reads integer ages from a CSV file with a header line. `column` is a
// header name or, failing that, a 0-based column index. Ages outside
// [0, 99] are dropped and counted; unparsable rows are counted as malformed.
// Errors: NotFound for a missing file, EmptyDataset when no age survives,
// MalformedRow when more than 1% of the rows are malformed.
absl::StatusOr<Dataset> LoadAges(const std::string& csv_path,
                                 const std::string& column = "age");

struct BoundingBox {
  double lat_min = 0.0;
  double lat_max = 0.0;
  double lon_min = 0.0;
  double lon_max = 0.0;

  bool Contains(double lat, double lon) const {
    return lat >= lat_min && lat <= lat_max && lon >= lon_min &&
           lon <= lon_max;
  }
};

// Equirectangular projection about the box center, in km, with the
// south-west corner of the box at the origin.
PlanarPoint ProjectToKm(const BoundingBox& box, double lat, double lon);

// Box dimensions in km under the same projection.
double BoxWidthKm(const BoundingBox& box);
double BoxHeightKm(const BoundingBox& box);

// A full grid of square cells of the given width covering the box, anchored
// at its south-west corner; the cell counts are the box extents divided by
// the width, rounded to the nearest integer.
absl::StatusOr<Alphabet> GridForBoundingBox(const BoundingBox& box,
                                            double cell_width_km);

// Index of the grid cell enclosing the point (points beyond the outer cells
// go to the nearest edge cell). The grid must be a full grid.
absl::StatusOr<std::size_t> EnclosingCell(const Alphabet& grid,
                                          const PlanarPoint& p);

// Reads a CSV with `lat` and `lon` columns (other columns ignored), drops
// rows outside the box, and maps every remaining check-in to its enclosing
// cell. BBoxGridMismatch when the grid does not cover the box.
absl::StatusOr<Dataset> LoadCheckins(const std::string& csv_path,
                                     const BoundingBox& box,
                                     const Alphabet& grid);

}  // namespace ldp

#endif  // LDP_DATA_IO_LOADERS_H_
