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

#ifndef LDP_CORE_ALPHABET_H_
#define LDP_CORE_ALPHABET_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/report.h"

namespace ldp {

// The domain of the secret attribute: categorical labels, a sorted set of
// integers, or the cell centres of a rectangular planar grid.
//
// Alphabets are immutable and cheap to copy (the element storage is shared).
class Alphabet {
 public:
  enum class Kind { kCategorical, kLinear, kPlanar };

  // Labels must be distinct and non-empty.
  static absl::StatusOr<Alphabet> Categorical(std::vector<std::string> labels);
  // Values must be strictly increasing.
  static absl::StatusOr<Alphabet> Linear(std::vector<std::int64_t> values);
  // The contiguous range {lo, lo+1, ..., hi}.
  static absl::StatusOr<Alphabet> IntegerRange(std::int64_t lo,
                                               std::int64_t hi);
  // A cols x rows grid whose lower-left cell centre is `first_center`. Cells
  // are stored row-major: index = row * cols + col.
  static absl::StatusOr<Alphabet> PlanarGrid(PlanarPoint first_center,
                                             int cols, int rows,
                                             double cell_width_km);
  // Validates that `centers` are a row-major rectangular grid with uniform
  // spacing `cell_width_km`.
  static absl::StatusOr<Alphabet> Planar(std::vector<PlanarPoint> centers,
                                         double cell_width_km);

  Kind kind() const { return data_->kind; }
  std::size_t size() const;

  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<std::int64_t>& values() const { return data_->values; }
  const std::vector<PlanarPoint>& centers() const { return data_->centers; }
  double cell_width_km() const { return data_->cell_width_km; }
  int grid_cols() const { return data_->cols; }
  int grid_rows() const { return data_->rows; }

  // Linear alphabets only: true when the values are consecutive integers.
  bool IsContiguous() const;

  Report ElementAt(std::size_t index) const;
  std::optional<std::size_t> IndexOf(const Report& element) const;
  ReportDomain element_domain() const;

  // Ground distance between two elements: |a - b| for linear alphabets,
  // Euclidean km for planar ones, and the discrete 0/1 metric for labels.
  double Distance(std::size_t i, std::size_t j) const;

  // The sub-alphabet made of the listed (strictly increasing) indices.
  // Planar subsets keep their centres and cell width but are no longer full
  // grids (grid_cols() == grid_rows() == 0).
  absl::StatusOr<Alphabet> Subset(const std::vector<std::size_t>& indices) const;

  // Planar alphabets that are full rectangular grids.
  bool IsFullGrid() const { return data_->cols > 0; }

  bool operator==(const Alphabet& other) const;

 private:
  struct Data {
    Kind kind = Kind::kCategorical;
    std::vector<std::string> labels;
    std::vector<std::int64_t> values;
    std::vector<PlanarPoint> centers;
    double cell_width_km = 0.0;
    int cols = 0;
    int rows = 0;
    std::map<std::string, std::size_t> label_index;
    std::map<PlanarPoint, std::size_t> point_index;
  };
  explicit Alphabet(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace ldp

#endif  // LDP_CORE_ALPHABET_H_
