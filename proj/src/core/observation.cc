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

#include "ldp/core/observation.h"

#include "absl/status/status.h"

namespace ldp {

ObservationSet ObservationSet::FromReports(std::span<const Report> reports) {
  ObservationSet out;
  for (const Report& r : reports) ++out.counts_[r];
  out.n_ = static_cast<std::int64_t>(reports.size());
  return out;
}

absl::StatusOr<ObservationSet> ObservationSet::FromCounts(
    std::map<Report, std::int64_t> counts) {
  ObservationSet out;
  for (const auto& [value, count] : counts) {
    if (count <= 0) {
      return absl::InvalidArgumentError(
          "observation counts must be positive");
    }
    out.n_ += count;
  }
  out.counts_ = std::move(counts);
  return out;
}

std::vector<Report> ObservationSet::Reports() const {
  std::vector<Report> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (const auto& [value, count] : counts_) {
    for (std::int64_t i = 0; i < count; ++i) out.push_back(value);
  }
  return out;
}

ObservationSet ObservationSet::Merge(const ObservationSet& other) const {
  ObservationSet out = *this;
  for (const auto& [value, count] : other.counts_) out.counts_[value] += count;
  out.n_ += other.n_;
  return out;
}

absl::StatusOr<Empirical> ToEmpirical(const ObservationSet& obs) {
  if (obs.empty()) {
    return absl::InvalidArgumentError("EmptyObservations: no reports");
  }
  Empirical q;
  q.values.reserve(obs.distinct());
  q.freqs.reserve(obs.distinct());
  const double n = static_cast<double>(obs.n());
  for (const auto& [value, count] : obs.counts()) {
    q.values.push_back(value);
    q.freqs.push_back(static_cast<double>(count) / n);
  }
  return q;
}

}  // namespace ldp
