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

#ifndef LDP_CORE_REPORT_H_
#define LDP_CORE_REPORT_H_

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace ldp {

// A location in the plane, in kilometres.
struct PlanarPoint {
  double x_km = 0.0;
  double y_km = 0.0;

  auto operator<=>(const PlanarPoint&) const = default;
};

double EuclideanDistance(const PlanarPoint& a, const PlanarPoint& b);

// A bit array reported by the unary-encoding randomizer. Each entry is 0 or 1.
struct BitVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  int PopCount() const;
  auto operator<=>(const BitVector&) const = default;
};

// One value produced by a mechanism, or one element of an alphabet.
// Integers cover linear alphabets and the integer line, strings cover
// categorical labels, points cover planar grids and the continuous plane.
using Report = std::variant<std::int64_t, std::string, PlanarPoint, BitVector>;

enum class ReportDomain { kInteger, kLabel, kPoint, kBits };

ReportDomain DomainOf(const Report& r);
absl::string_view ReportDomainName(ReportDomain d);
absl::StatusOr<ReportDomain> ParseReportDomain(absl::string_view name);

// Text form used as JSON object keys: "12", "label", "1.25,0.5", "0110".
std::string EncodeReport(const Report& r);
absl::StatusOr<Report> DecodeReport(absl::string_view text, ReportDomain domain);

}  // namespace ldp

#endif  // LDP_CORE_REPORT_H_
