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

#ifndef LDP_DATA_IO_DATASET_H_
#define LDP_DATA_IO_DATASET_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "absl/status/statusor.h"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"

namespace ldp {

// A list of secrets, each stored as an index into `alphabet`.
struct Dataset {
  Alphabet alphabet;
  std::vector<std::size_t> indices;
  // File path or generator description.
  std::string source;
  std::int64_t malformed_rows = 0;
  std::int64_t dropped_rows = 0;
};

// Relative frequencies of the dataset over its alphabet.
absl::StatusOr<Distribution> EmpiricalDistribution(const Dataset& data);

// {"alphabet", "data": [elements...], "source"}.
nlohmann::json DatasetToJson(const Dataset& data);
absl::StatusOr<Dataset> DatasetFromJson(const nlohmann::json& j);

}  // namespace ldp

#endif  // LDP_DATA_IO_DATASET_H_
