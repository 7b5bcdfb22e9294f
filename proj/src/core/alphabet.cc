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

#include "ldp/core/alphabet.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {
namespace {

constexpr double kGridTolerance = 1e-9;

}  // namespace

absl::StatusOr<Alphabet> Alphabet::Categorical(
    std::vector<std::string> labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("categorical alphabet must be non-empty");
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::kCategorical;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->label_index.emplace(labels[i], i).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate label '", labels[i], "'"));
    }
  }
  data->labels = std::move(labels);
  return Alphabet(std::move(data));
}

absl::StatusOr<Alphabet> Alphabet::Linear(std::vector<std::int64_t> values) {
  if (values.empty()) {
    return absl::InvalidArgumentError("linear alphabet must be non-empty");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      return absl::InvalidArgumentError(
          "linear alphabet values must be strictly increasing");
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::kLinear;
  data->values = std::move(values);
  return Alphabet(std::move(data));
}

absl::StatusOr<Alphabet> Alphabet::IntegerRange(std::int64_t lo,
                                                std::int64_t hi) {
  if (hi < lo) {
    return absl::InvalidArgumentError(
        absl::StrCat("empty integer range [", lo, ", ", hi, "]"));
  }
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
  return Linear(std::move(values));
}

absl::StatusOr<Alphabet> Alphabet::PlanarGrid(PlanarPoint first_center,
                                              int cols, int rows,
                                              double cell_width_km) {
  if (cols <= 0 || rows <= 0) {
    return absl::InvalidArgumentError("grid dimensions must be positive");
  }
  if (!(cell_width_km > 0.0) || !std::isfinite(cell_width_km)) {
    return absl::InvalidArgumentError("cell width must be positive");
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::kPlanar;
  data->cell_width_km = cell_width_km;
  data->cols = cols;
  data->rows = rows;
  data->centers.reserve(static_cast<std::size_t>(cols) * rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const PlanarPoint p{first_center.x_km + c * cell_width_km,
                          first_center.y_km + r * cell_width_km};
      data->point_index.emplace(p, data->centers.size());
      data->centers.push_back(p);
    }
  }
  return Alphabet(std::move(data));
}

absl::StatusOr<Alphabet> Alphabet::Planar(std::vector<PlanarPoint> centers,
                                          double cell_width_km) {
  if (centers.empty()) {
    return absl::InvalidArgumentError("planar alphabet must be non-empty");
  }
  if (!(cell_width_km > 0.0)) {
    return absl::InvalidArgumentError("cell width must be positive");
  }
  const PlanarPoint first = centers.front();
  int cols = 1;
  while (static_cast<std::size_t>(cols) < centers.size() &&
         std::fabs(centers[cols].y_km - first.y_km) < kGridTolerance) {
    ++cols;
  }
  if (centers.size() % cols != 0) {
    return absl::InvalidArgumentError(
        "planar centres do not form a rectangular grid");
  }
  const int rows = static_cast<int>(centers.size() / cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const PlanarPoint& p = centers[static_cast<std::size_t>(r) * cols + c];
      if (std::fabs(p.x_km - (first.x_km + c * cell_width_km)) >
              kGridTolerance * std::max(1.0, std::fabs(p.x_km)) ||
          std::fabs(p.y_km - (first.y_km + r * cell_width_km)) >
              kGridTolerance * std::max(1.0, std::fabs(p.y_km))) {
        return absl::InvalidArgumentError(absl::StrCat(
            "planar centre ", r * cols + c,
            " is off the uniform grid of width ", cell_width_km));
      }
    }
  }
  return PlanarGrid(first, cols, rows, cell_width_km);
}

std::size_t Alphabet::size() const {
  switch (data_->kind) {
    case Kind::kCategorical:
      return data_->labels.size();
    case Kind::kLinear:
      return data_->values.size();
    case Kind::kPlanar:
      return data_->centers.size();
  }
  return 0;
}

bool Alphabet::IsContiguous() const {
  if (data_->kind != Kind::kLinear) return false;
  const auto& v = data_->values;
  return v.back() - v.front() == static_cast<std::int64_t>(v.size()) - 1;
}

Report Alphabet::ElementAt(std::size_t index) const {
  switch (data_->kind) {
    case Kind::kCategorical:
      return data_->labels.at(index);
    case Kind::kLinear:
      return data_->values.at(index);
    case Kind::kPlanar:
      return data_->centers.at(index);
  }
  return std::int64_t{0};
}

ReportDomain Alphabet::element_domain() const {
  switch (data_->kind) {
    case Kind::kCategorical:
      return ReportDomain::kLabel;
    case Kind::kLinear:
      return ReportDomain::kInteger;
    case Kind::kPlanar:
      return ReportDomain::kPoint;
  }
  return ReportDomain::kLabel;
}

std::optional<std::size_t> Alphabet::IndexOf(const Report& element) const {
  switch (data_->kind) {
    case Kind::kCategorical: {
      const auto* s = std::get_if<std::string>(&element);
      if (s == nullptr) return std::nullopt;
      auto it = data_->label_index.find(*s);
      if (it == data_->label_index.end()) return std::nullopt;
      return it->second;
    }
    case Kind::kLinear: {
      const auto* v = std::get_if<std::int64_t>(&element);
      if (v == nullptr) return std::nullopt;
      const auto& values = data_->values;
      auto it = std::lower_bound(values.begin(), values.end(), *v);
      if (it == values.end() || *it != *v) return std::nullopt;
      return static_cast<std::size_t>(it - values.begin());
    }
    case Kind::kPlanar: {
      const auto* p = std::get_if<PlanarPoint>(&element);
      if (p == nullptr) return std::nullopt;
      auto it = data_->point_index.find(*p);
      if (it != data_->point_index.end()) return it->second;
      // Tolerate round-off from text round trips.
      auto near = data_->point_index.lower_bound(
          PlanarPoint{p->x_km - kGridTolerance, -1e300});
      for (; near != data_->point_index.end() &&
             near->first.x_km <= p->x_km + kGridTolerance;
           ++near) {
        if (std::fabs(near->first.y_km - p->y_km) <= kGridTolerance) {
          return near->second;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double Alphabet::Distance(std::size_t i, std::size_t j) const {
  switch (data_->kind) {
    case Kind::kCategorical:
      return i == j ? 0.0 : 1.0;
    case Kind::kLinear:
      return std::fabs(static_cast<double>(data_->values[i]) -
                       static_cast<double>(data_->values[j]));
    case Kind::kPlanar:
      return EuclideanDistance(data_->centers[i], data_->centers[j]);
  }
  return 0.0;
}

absl::StatusOr<Alphabet> Alphabet::Subset(
    const std::vector<std::size_t>& indices) const {
  if (indices.empty()) {
    return absl::InvalidArgumentError("subset must be non-empty");
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= size() || (k > 0 && indices[k] <= indices[k - 1])) {
      return absl::InvalidArgumentError(
          "subset indices must be strictly increasing and in range");
    }
  }
  switch (data_->kind) {
    case Kind::kCategorical: {
      std::vector<std::string> labels;
      for (std::size_t i : indices) labels.push_back(data_->labels[i]);
      return Categorical(std::move(labels));
    }
    case Kind::kLinear: {
      std::vector<std::int64_t> values;
      for (std::size_t i : indices) values.push_back(data_->values[i]);
      return Linear(std::move(values));
    }
    case Kind::kPlanar: {
      auto data = std::make_shared<Data>();
      data->kind = Kind::kPlanar;
      data->cell_width_km = data_->cell_width_km;
      for (std::size_t i : indices) {
        data->point_index.emplace(data_->centers[i], data->centers.size());
        data->centers.push_back(data_->centers[i]);
      }
      return Alphabet(std::move(data));
    }
  }
  return absl::InternalError("unreachable");
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (data_ == other.data_) return true;
  if (data_->kind != other.data_->kind) return false;
  switch (data_->kind) {
    case Kind::kCategorical:
      return data_->labels == other.data_->labels;
    case Kind::kLinear:
      return data_->values == other.data_->values;
    case Kind::kPlanar: {
      if (data_->centers.size() != other.data_->centers.size() ||
          std::fabs(data_->cell_width_km - other.data_->cell_width_km) >
              kGridTolerance) {
        return false;
      }
      for (std::size_t i = 0; i < data_->centers.size(); ++i) {
        if (EuclideanDistance(data_->centers[i], other.data_->centers[i]) >
            kGridTolerance) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace ldp
