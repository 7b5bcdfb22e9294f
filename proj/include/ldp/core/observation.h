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

#ifndef LDP_CORE_OBSERVATION_H_
#define LDP_CORE_OBSERVATION_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/core/report.h"

namespace ldp {

// The noisy reports collected from n users, stored as counts per distinct
// value. Identical reports contribute identical likelihood terms, so the
// grouped form loses nothing.
class ObservationSet {
 public:
  ObservationSet() = default;

  static ObservationSet FromReports(std::span<const Report> reports);
  // Every count must be positive.
  static absl::StatusOr<ObservationSet> FromCounts(
      std::map<Report, std::int64_t> counts);

  const std::map<Report, std::int64_t>& counts() const { return counts_; }
  std::int64_t n() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::size_t distinct() const { return counts_.size(); }

  // The reports as a flat list, grouped by value in sorted order.
  std::vector<Report> Reports() const;

  // The union of two observation sets.
  ObservationSet Merge(const ObservationSet& other) const;

 private:
  std::map<Report, std::int64_t> counts_;
  std::int64_t n_ = 0;
};

// The empirical distribution q over the distinct observed values. Values
// never observed are not stored.
struct Empirical {
  std::vector<Report> values;
  std::vector<double> freqs;
};

absl::StatusOr<Empirical> ToEmpirical(const ObservationSet& obs);

}  // namespace ldp

#endif  // LDP_CORE_OBSERVATION_H_
