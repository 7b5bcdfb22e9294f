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

#include "ldp/data_io/loaders.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace ldp {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;

std::vector<std::string> SplitCsvLine(absl::string_view line) {
  line = absl::StripSuffix(line, "\r");
  std::vector<std::string> fields;
  for (absl::string_view field : absl::StrSplit(line, ',')) {
    field = absl::StripAsciiWhitespace(field);
    if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
      field = field.substr(1, field.size() - 2);
    }
    fields.emplace_back(field);
  }
  return fields;
}

struct CsvFile {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

absl::StatusOr<CsvFile> ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("FileNotFound: ", path));
  }
  CsvFile csv;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    if (!have_header) {
      csv.header = SplitCsvLine(line);
      have_header = true;
    } else {
      csv.rows.push_back(SplitCsvLine(line));
    }
  }
  if (!have_header || csv.rows.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("EmptyDataset: no data rows in ", path));
  }
  return csv;
}

std::optional<std::size_t> FindColumn(const std::vector<std::string>& header,
                                      const std::string& column) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (absl::AsciiStrToLower(header[i]) == absl::AsciiStrToLower(column)) {
      return i;
    }
  }
  std::size_t index = 0;
  if (absl::SimpleAtoi(column, &index) && index < header.size()) return index;
  return std::nullopt;
}

absl::Status CheckMalformed(std::int64_t malformed, std::size_t rows,
                            const std::string& path) {
  if (static_cast<double>(malformed) >
      kMalformedRowThreshold * static_cast<double>(rows)) {
    return absl::InvalidArgumentError(
        absl::StrCat("MalformedRow: ", malformed, " of ", rows,
                     " rows could not be parsed in ", path));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Dataset> LoadAges(const std::string& csv_path,
                                 const std::string& column) {
  absl::StatusOr<CsvFile> csv = ReadCsv(csv_path);
  if (!csv.ok()) return csv.status();
  const auto col = FindColumn(csv->header, column);
  if (!col) {
    return absl::InvalidArgumentError(
        absl::StrCat("no column '", column, "' in ", csv_path));
  }
  Dataset data{.alphabet = *Alphabet::IntegerRange(0, kMaxAge),
               .source = csv_path};
  for (const auto& row : csv->rows) {
    std::int64_t age = 0;
    if (*col >= row.size() || !absl::SimpleAtoi(row[*col], &age)) {
      ++data.malformed_rows;
      continue;
    }
    if (age < 0 || age > kMaxAge) {
      ++data.dropped_rows;
      continue;
    }
    data.indices.push_back(static_cast<std::size_t>(age));
  }
  if (auto s = CheckMalformed(data.malformed_rows, csv->rows.size(), csv_path);
      !s.ok()) {
    return s;
  }
  if (data.indices.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("EmptyDataset: no usable ages in ", csv_path));
  }
  return data;
}

double BoxWidthKm(const BoundingBox& box) {
  return ProjectToKm(box, box.lat_min, box.lon_max).x_km;
}

double BoxHeightKm(const BoundingBox& box) {
  return ProjectToKm(box, box.lat_max, box.lon_min).y_km;
}

PlanarPoint ProjectToKm(const BoundingBox& box, double lat, double lon) {
  constexpr double kDegree = std::numbers::pi / 180.0;
  const double lat_center = 0.5 * (box.lat_min + box.lat_max);
  return {kEarthRadiusKm * std::cos(lat_center * kDegree) *
              (lon - box.lon_min) * kDegree,
          kEarthRadiusKm * (lat - box.lat_min) * kDegree};
}

absl::StatusOr<Alphabet> GridForBoundingBox(const BoundingBox& box,
                                            double cell_width_km) {
  if (!(box.lat_max > box.lat_min) || !(box.lon_max > box.lon_min)) {
    return absl::InvalidArgumentError("bounding box must have positive area");
  }
  if (!(cell_width_km > 0.0)) {
    return absl::InvalidArgumentError("cell width must be positive");
  }
  const int cols = std::max(
      1, static_cast<int>(std::lround(BoxWidthKm(box) / cell_width_km)));
  const int rows = std::max(
      1, static_cast<int>(std::lround(BoxHeightKm(box) / cell_width_km)));
  return Alphabet::PlanarGrid({cell_width_km / 2.0, cell_width_km / 2.0}, cols,
                              rows, cell_width_km);
}

absl::StatusOr<std::size_t> EnclosingCell(const Alphabet& grid,
                                          const PlanarPoint& p) {
  if (grid.kind() != Alphabet::Kind::kPlanar || !grid.IsFullGrid()) {
    return absl::InvalidArgumentError(
        "GridMismatch: enclosing cells need a full planar grid");
  }
  const double w = grid.cell_width_km();
  const PlanarPoint& first = grid.centers().front();
  const auto cell = [w](double v, double first_center, int count) {
    const double k = std::floor((v - (first_center - w / 2.0)) / w);
    return static_cast<int>(std::clamp(k, 0.0, count - 1.0));
  };
  const int c = cell(p.x_km, first.x_km, grid.grid_cols());
  const int r = cell(p.y_km, first.y_km, grid.grid_rows());
  return static_cast<std::size_t>(r) * grid.grid_cols() + c;
}

absl::StatusOr<Dataset> LoadCheckins(const std::string& csv_path,
                                     const BoundingBox& box,
                                     const Alphabet& grid) {
  if (grid.kind() != Alphabet::Kind::kPlanar || !grid.IsFullGrid()) {
    return absl::InvalidArgumentError(
        "BBoxGridMismatch: check-ins need a full planar grid");
  }
  const double w = grid.cell_width_km();
  const PlanarPoint& first = grid.centers().front();
  const double grid_w = grid.grid_cols() * w;
  const double grid_h = grid.grid_rows() * w;
  if (std::fabs(first.x_km - w / 2.0) > 1e-9 ||
      std::fabs(first.y_km - w / 2.0) > 1e-9 ||
      std::fabs(grid_w - BoxWidthKm(box)) > w / 2.0 ||
      std::fabs(grid_h - BoxHeightKm(box)) > w / 2.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "BBoxGridMismatch: grid ", grid_w, " x ", grid_h,
        " km anchored at the box corner does not cover the box ",
        BoxWidthKm(box), " x ", BoxHeightKm(box), " km"));
  }
  absl::StatusOr<CsvFile> csv = ReadCsv(csv_path);
  if (!csv.ok()) return csv.status();
  const auto lat_col = FindColumn(csv->header, "lat");
  const auto lon_col = FindColumn(csv->header, "lon");
  if (!lat_col || !lon_col) {
    return absl::InvalidArgumentError(
        absl::StrCat("columns 'lat' and 'lon' required in ", csv_path));
  }
  Dataset data{.alphabet = grid, .source = csv_path};
  for (const auto& row : csv->rows) {
    double lat = 0.0;
    double lon = 0.0;
    if (*lat_col >= row.size() || *lon_col >= row.size() ||
        !absl::SimpleAtod(row[*lat_col], &lat) ||
        !absl::SimpleAtod(row[*lon_col], &lon) || lat < -90.0 || lat > 90.0 ||
        lon < -180.0 || lon > 180.0) {
      ++data.malformed_rows;
      continue;
    }
    if (!box.Contains(lat, lon)) {
      ++data.dropped_rows;
      continue;
    }
    data.indices.push_back(*EnclosingCell(grid, ProjectToKm(box, lat, lon)));
  }
  if (auto s = CheckMalformed(data.malformed_rows, csv->rows.size(), csv_path);
      !s.ok()) {
    return s;
  }
  if (data.indices.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("EmptyDataset: no check-ins inside the box in ",
                     csv_path));
  }
  return data;
}

}  // namespace ldp
