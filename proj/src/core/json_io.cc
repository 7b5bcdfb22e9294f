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

#include "ldp/core/json_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldp {

using nlohmann::json;

json AlphabetToJson(const Alphabet& alphabet) {
  switch (alphabet.kind()) {
    case Alphabet::Kind::kCategorical:
      return {{"kind", "categorical"}, {"labels", alphabet.labels()}};
    case Alphabet::Kind::kLinear:
      return {{"kind", "linear"}, {"values", alphabet.values()}};
    case Alphabet::Kind::kPlanar: {
      json centers = json::array();
      for (const PlanarPoint& p : alphabet.centers()) {
        centers.push_back({p.x_km, p.y_km});
      }
      json out = {{"kind", "planar"},
                  {"cell_width_km", alphabet.cell_width_km()},
                  {"centers", std::move(centers)}};
      if (alphabet.IsFullGrid()) {
        out["cols"] = alphabet.grid_cols();
        out["rows"] = alphabet.grid_rows();
      }
      return out;
    }
  }
  return json();
}

absl::StatusOr<Alphabet> AlphabetFromJson(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "categorical") {
      return Alphabet::Categorical(j.at("labels").get<std::vector<std::string>>());
    }
    if (kind == "linear") {
      return Alphabet::Linear(j.at("values").get<std::vector<std::int64_t>>());
    }
    if (kind == "planar") {
      std::vector<PlanarPoint> centers;
      for (const json& c : j.at("centers")) {
        centers.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
      }
      const double width = j.at("cell_width_km").get<double>();
      if (j.contains("cols")) return Alphabet::Planar(std::move(centers), width);
      // A planar subset: rebuild by selecting points of their bounding grid.
      absl::StatusOr<Alphabet> grid = Alphabet::Planar(centers, width);
      if (grid.ok()) return grid;
      double min_x = centers[0].x_km, min_y = centers[0].y_km;
      double max_x = min_x, max_y = min_y;
      for (const PlanarPoint& p : centers) {
        min_x = std::min(min_x, p.x_km);
        min_y = std::min(min_y, p.y_km);
        max_x = std::max(max_x, p.x_km);
        max_y = std::max(max_y, p.y_km);
      }
      const int cols = static_cast<int>(std::lround((max_x - min_x) / width)) + 1;
      const int rows = static_cast<int>(std::lround((max_y - min_y) / width)) + 1;
      absl::StatusOr<Alphabet> full =
          Alphabet::PlanarGrid({min_x, min_y}, cols, rows, width);
      if (!full.ok()) return full.status();
      std::vector<std::size_t> idx;
      for (const PlanarPoint& p : centers) {
        std::optional<std::size_t> i = full->IndexOf(p);
        if (!i) return absl::InvalidArgumentError("planar subset off grid");
        idx.push_back(*i);
      }
      return full->Subset(idx);
    }
    return absl::InvalidArgumentError(
        absl::StrCat("unknown alphabet kind '", kind, "'"));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed alphabet JSON: ", e.what()));
  }
}

json DistributionToJson(const Distribution& d) {
  return {{"alphabet", AlphabetToJson(d.alphabet())},
          {"probs", std::vector<double>(d.probs().begin(), d.probs().end())}};
}

absl::StatusOr<Distribution> DistributionFromJson(const json& j) {
  try {
    absl::StatusOr<Alphabet> alphabet = AlphabetFromJson(j.at("alphabet"));
    if (!alphabet.ok()) return alphabet.status();
    return Distribution::Create(*std::move(alphabet),
                                j.at("probs").get<std::vector<double>>());
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed distribution JSON: ", e.what()));
  }
}

json ObservationsToJson(const ObservationSet& obs) {
  json reports = json::object();
  ReportDomain domain = ReportDomain::kLabel;
  for (const auto& [value, count] : obs.counts()) {
    domain = DomainOf(value);
    reports[EncodeReport(value)] = count;
  }
  return {{"domain", ReportDomainName(domain)},
          {"reports", std::move(reports)},
          {"n", obs.n()}};
}

absl::StatusOr<ObservationSet> ObservationsFromJson(const json& j) {
  try {
    ReportDomain domain = ReportDomain::kLabel;
    if (j.contains("domain")) {
      absl::StatusOr<ReportDomain> d =
          ParseReportDomain(j.at("domain").get<std::string>());
      if (!d.ok()) return d.status();
      domain = *d;
    }
    std::map<Report, std::int64_t> counts;
    for (const auto& [key, value] : j.at("reports").items()) {
      absl::StatusOr<Report> r = DecodeReport(key, domain);
      if (!r.ok()) return r.status();
      counts[*std::move(r)] += value.get<std::int64_t>();
    }
    absl::StatusOr<ObservationSet> obs =
        ObservationSet::FromCounts(std::move(counts));
    if (!obs.ok()) return obs.status();
    if (j.contains("n") && j.at("n").get<std::int64_t>() != obs->n()) {
      return absl::InvalidArgumentError(
          "observation counts do not sum to the stated n");
    }
    return obs;
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed observations JSON: ", e.what()));
  }
}

absl::StatusOr<json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("FileNotFound: ", path));
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse ", path, ": ", e.what()));
  }
}

absl::Status WriteJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out << j.dump(2) << "\n";
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

}  // namespace ldp
