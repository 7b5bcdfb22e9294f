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

#include "ldp/data_io/dataset.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/core/json_io.h"

namespace ldp {

absl::StatusOr<Distribution> EmpiricalDistribution(const Dataset& data) {
  if (data.indices.empty()) {
    return absl::InvalidArgumentError("EmptyDataset: no records");
  }
  std::vector<double> counts(data.alphabet.size(), 0.0);
  for (std::size_t i : data.indices) {
    if (i >= counts.size()) {
      return absl::InvalidArgumentError(
          "ElementOutsideAlphabet: dataset index beyond the alphabet");
    }
    counts[i] += 1.0;
  }
  return Distribution::Create(data.alphabet, std::move(counts));
}

nlohmann::json DatasetToJson(const Dataset& data) {
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t i : data.indices) {
    elements.push_back(EncodeReport(data.alphabet.ElementAt(i)));
  }
  return {{"alphabet", AlphabetToJson(data.alphabet)},
          {"data", std::move(elements)},
          {"source", data.source}};
}

absl::StatusOr<Dataset> DatasetFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("data") ||
      !j["data"].is_array()) {
    return absl::InvalidArgumentError(
        "dataset JSON needs 'alphabet' and a 'data' array");
  }
  absl::StatusOr<Alphabet> alphabet = AlphabetFromJson(j["alphabet"]);
  if (!alphabet.ok()) return alphabet.status();
  Dataset data{.alphabet = *alphabet};
  data.source = j.value("source", std::string());
  for (const auto& item : j["data"]) {
    if (!item.is_string()) {
      return absl::InvalidArgumentError("dataset elements must be strings");
    }
    absl::StatusOr<Report> element =
        DecodeReport(item.get<std::string>(), alphabet->element_domain());
    if (!element.ok()) return element.status();
    const auto index = alphabet->IndexOf(*element);
    if (!index) {
      return absl::InvalidArgumentError(
          absl::StrCat("ElementOutsideAlphabet: '", item.get<std::string>(),
                       "'"));
    }
    data.indices.push_back(*index);
  }
  return data;
}

}  // namespace ldp
