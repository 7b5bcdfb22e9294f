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

#include "ldp/core/report.h"

#include <charconv>
#include <cmath>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"

namespace ldp {

double EuclideanDistance(const PlanarPoint& a, const PlanarPoint& b) {
  return std::hypot(a.x_km - b.x_km, a.y_km - b.y_km);
}

int BitVector::PopCount() const {
  int s = 0;
  for (std::uint8_t b : bits) s += b;
  return s;
}

ReportDomain DomainOf(const Report& r) {
  return static_cast<ReportDomain>(r.index());
}

absl::string_view ReportDomainName(ReportDomain d) {
  switch (d) {
    case ReportDomain::kInteger:
      return "integer";
    case ReportDomain::kLabel:
      return "label";
    case ReportDomain::kPoint:
      return "point";
    case ReportDomain::kBits:
      return "bits";
  }
  return "unknown";
}

absl::StatusOr<ReportDomain> ParseReportDomain(absl::string_view name) {
  if (name == "integer") return ReportDomain::kInteger;
  if (name == "label") return ReportDomain::kLabel;
  if (name == "point") return ReportDomain::kPoint;
  if (name == "bits") return ReportDomain::kBits;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown report domain '", name, "'"));
}

std::string EncodeReport(const Report& r) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return absl::StrCat(v); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const PlanarPoint& p) const {
      return absl::StrFormat("%.17g,%.17g", p.x_km, p.y_km);
    }
    std::string operator()(const BitVector& b) const {
      std::string out;
      out.reserve(b.size());
      for (std::uint8_t bit : b.bits) out.push_back(bit ? '1' : '0');
      return out;
    }
  };
  return std::visit(Visitor{}, r);
}

absl::StatusOr<Report> DecodeReport(absl::string_view text,
                                    ReportDomain domain) {
  switch (domain) {
    case ReportDomain::kInteger: {
      std::int64_t v;
      if (!absl::SimpleAtoi(text, &v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("malformed integer report '", text, "'"));
      }
      return Report(v);
    }
    case ReportDomain::kLabel:
      return Report(std::string(text));
    case ReportDomain::kPoint: {
      std::vector<absl::string_view> parts = absl::StrSplit(text, ',');
      double x, y;
      if (parts.size() != 2 || !absl::SimpleAtod(parts[0], &x) ||
          !absl::SimpleAtod(parts[1], &y)) {
        return absl::InvalidArgumentError(
            absl::StrCat("malformed point report '", text, "'"));
      }
      return Report(PlanarPoint{x, y});
    }
    case ReportDomain::kBits: {
      BitVector b;
      b.bits.reserve(text.size());
      for (char c : text) {
        if (c != '0' && c != '1') {
          return absl::InvalidArgumentError(
              absl::StrCat("malformed bit-vector report '", text, "'"));
        }
        b.bits.push_back(c == '1' ? 1 : 0);
      }
      return Report(std::move(b));
    }
  }
  return absl::InvalidArgumentError("unknown report domain");
}

}  // namespace ldp
