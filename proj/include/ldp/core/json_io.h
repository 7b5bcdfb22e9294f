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

#ifndef LDP_CORE_JSON_IO_H_
#define LDP_CORE_JSON_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "ldp/core/alphabet.h"
#include "ldp/core/distribution.h"
#include "ldp/core/observation.h"

namespace ldp {

// Alphabet:
//   {"kind": "categorical", "labels": [...]}
//   {"kind": "linear", "values": [...]}
//   {"kind": "planar", "cell_width_km": w, "centers": [[x, y], ...]}
nlohmann::json AlphabetToJson(const Alphabet& alphabet);
absl::StatusOr<Alphabet> AlphabetFromJson(const nlohmann::json& j);

// {"alphabet": {...}, "probs": [...]}
nlohmann::json DistributionToJson(const Distribution& d);
absl::StatusOr<Distribution> DistributionFromJson(const nlohmann::json& j);

// {"domain": "integer", "reports": {"value": count, ...}, "n": N}
// "domain" selects how keys are decoded; it defaults to "label".
nlohmann::json ObservationsToJson(const ObservationSet& obs);
absl::StatusOr<ObservationSet> ObservationsFromJson(const nlohmann::json& j);

absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path);
absl::Status WriteJsonFile(const std::string& path, const nlohmann::json& j);

}  // namespace ldp

#endif  // LDP_CORE_JSON_IO_H_
