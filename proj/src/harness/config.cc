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

#include "ldp/harness/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "ldp/data_io/synthetic.h"
#include "ldp/mechanisms/mechanisms.h"

namespace ldp {
namespace {

absl::Status ConfigError(absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("ConfigError: ", message));
}

const std::set<std::string>& KnownKeys() {
  static const auto* keys = new std::set<std::string>{
      "dataset",       "dataset_path",   "dataset_column", "bbox",
      "cell_width_km", "binomial_k",     "binomial_p",     "uniform_values",
      "dataset_weights", "alphabet",     "n",              "mechanism",
      "eps",           "estimators",     "metrics",        "replications",
      "seed",          "out",            "summary_out",    "ibu_delta",
      "ibu_max_iter",  "likely_subset",  "rappor_post",    "record_runtime",
      "threads"};
  return *keys;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    item = absl::StripAsciiWhitespace(item);
    if (!item.empty()) items.emplace_back(item);
  }
  return items;
}

absl::StatusOr<bool> ParseBool(const std::string& key,
                               const std::string& value) {
  const std::string v = absl::AsciiStrToLower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  return ConfigError(absl::StrCat(key, " must be true or false"));
}

template <typename T>
absl::StatusOr<T> ParseNumber(const std::string& key,
                              const std::string& value) {
  T out{};
  bool ok = false;
  if constexpr (std::is_floating_point_v<T>) {
    ok = absl::SimpleAtod(value, &out);
  } else {
    ok = absl::SimpleAtoi(value, &out);
  }
  if (!ok) return ConfigError(absl::StrCat(key, ": bad number '", value, "'"));
  return out;
}

}  // namespace

absl::StatusOr<KeyValues> ParseKeyValues(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    absl::string_view view = absl::StripAsciiWhitespace(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == absl::string_view::npos) {
      return ConfigError(absl::StrCat("line ", line_no, ": expected key = value"));
    }
    std::string key(absl::StripAsciiWhitespace(view.substr(0, eq)));
    std::string value(absl::StripAsciiWhitespace(view.substr(eq + 1)));
    if (key.empty()) {
      return ConfigError(absl::StrCat("line ", line_no, ": empty key"));
    }
    if (!kv.emplace(key, value).second) {
      return ConfigError(absl::StrCat("line ", line_no, ": duplicate key '",
                                      key, "'"));
    }
  }
  return kv;
}

absl::StatusOr<KeyValues> ReadKeyValueFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("FileNotFound: ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseKeyValues(buffer.str());
}

absl::StatusOr<std::vector<double>> ParseDoubleList(const std::string& text) {
  std::vector<double> values;
  for (const std::string& item : SplitList(text)) {
    double v = 0.0;
    if (!absl::SimpleAtod(item, &v)) {
      return ConfigError(absl::StrCat("bad number '", item, "'"));
    }
    values.push_back(v);
  }
  if (values.empty()) return ConfigError("empty number list");
  return values;
}

absl::StatusOr<Alphabet> ParseAlphabetSpec(const std::string& spec) {
  std::vector<std::string> parts = absl::StrSplit(spec, ':');
  if (parts[0] == "range" && parts.size() == 3) {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    if (!absl::SimpleAtoi(parts[1], &lo) || !absl::SimpleAtoi(parts[2], &hi)) {
      return ConfigError(absl::StrCat("bad range alphabet '", spec, "'"));
    }
    return Alphabet::IntegerRange(lo, hi);
  }
  if (parts[0] == "labels" && parts.size() == 2) {
    return Alphabet::Categorical(SplitList(parts[1]));
  }
  if (parts[0] == "grid" && parts.size() == 4) {
    int cols = 0;
    int rows = 0;
    double width = 0.0;
    if (!absl::SimpleAtoi(parts[1], &cols) ||
        !absl::SimpleAtoi(parts[2], &rows) ||
        !absl::SimpleAtod(parts[3], &width)) {
      return ConfigError(absl::StrCat("bad grid alphabet '", spec, "'"));
    }
    return Alphabet::PlanarGrid({width / 2.0, width / 2.0}, cols, rows, width);
  }
  return ConfigError(absl::StrCat(
      "alphabet spec '", spec,
      "' is not range:LO:HI, labels:a,b,... or grid:COLS:ROWS:WIDTH"));
}

absl::StatusOr<Mechanism> BuildMechanismByName(const std::string& name,
                                               const Alphabet& alphabet,
                                               double eps) {
  absl::StatusOr<MechanismKind> kind = ParseMechanismKind(name);
  if (!kind.ok()) return ConfigError(kind.status().message());
  switch (*kind) {
    case MechanismKind::kIdentity:
      return BuildIdentity(alphabet);
    case MechanismKind::kKrr:
      return BuildKrr(alphabet, eps);
    case MechanismKind::kGeometricLinear:
      return BuildGeometricLinear(alphabet, eps);
    case MechanismKind::kTruncatedGeometric:
      if (alphabet.kind() != Alphabet::Kind::kLinear ||
          !alphabet.IsContiguous()) {
        return ConfigError(
            "truncated_geometric needs a contiguous integer range");
      }
      return BuildTruncatedGeometric(alphabet.values().front(),
                                     alphabet.values().back(), eps);
    case MechanismKind::kGeometricPlanar:
      return BuildGeometricPlanar(alphabet, alphabet, eps);
    case MechanismKind::kLaplaceLinear:
      return BuildLaplaceLinearDiscretized(alphabet, eps);
    case MechanismKind::kLaplacePlanar:
      return BuildLaplacePlanarDiscretized(alphabet, eps);
    case MechanismKind::kLaplacePlanarContinuous:
      return BuildLaplacePlanarContinuous(alphabet, eps);
    case MechanismKind::kExponential:
      return BuildExponential(alphabet, eps);
    case MechanismKind::kRappor:
      return BuildRappor(alphabet, eps);
    case MechanismKind::kCustom:
      break;
  }
  return ConfigError("a custom mechanism cannot be built by name");
}

std::string EstimatorName(Estimator e) {
  switch (e) {
    case Estimator::kIbu:
      return "ibu";
    case Estimator::kInvN:
      return "inv-n";
    case Estimator::kInvP:
      return "inv-p";
    case Estimator::kRapporDecode:
      return "rappor-decode";
  }
  return "ibu";
}

absl::StatusOr<Estimator> ParseEstimator(const std::string& name) {
  for (Estimator e : {Estimator::kIbu, Estimator::kInvN, Estimator::kInvP,
                      Estimator::kRapporDecode}) {
    if (EstimatorName(e) == name) return e;
  }
  return ConfigError(absl::StrCat("unknown estimator '", name, "'"));
}

std::string MetricName(Metric m) {
  switch (m) {
    case Metric::kEmd:
      return "emd";
    case Metric::kTv:
      return "tv";
    case Metric::kL2sq:
      return "l2sq";
  }
  return "emd";
}

absl::StatusOr<Metric> ParseMetric(const std::string& name) {
  for (Metric m : {Metric::kEmd, Metric::kTv, Metric::kL2sq}) {
    if (MetricName(m) == name) return m;
  }
  return ConfigError(absl::StrCat("unknown metric '", name, "'"));
}

absl::StatusOr<ExperimentConfig> ExperimentConfigFromKeyValues(
    const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (!KnownKeys().contains(key)) {
      return ConfigError(absl::StrCat("unknown key '", key, "'"));
    }
  }
  auto get = [&kv](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  ExperimentConfig config;
  DatasetSpec& ds = config.dataset;

  if (const auto* v = get("dataset")) {
    ds.kind = *v;
  } else {
    return ConfigError("missing key 'dataset'");
  }
  if (const auto* v = get("dataset_path")) ds.path = *v;
  if (const auto* v = get("dataset_column")) ds.column = *v;
  if (const auto* v = get("alphabet")) ds.alphabet = *v;
  if (const auto* v = get("bbox")) {
    absl::StatusOr<std::vector<double>> b = ParseDoubleList(*v);
    if (!b.ok()) return b.status();
    if (b->size() != 4) {
      return ConfigError("bbox needs lat_min,lat_max,lon_min,lon_max");
    }
    ds.bbox = BoundingBox{(*b)[0], (*b)[1], (*b)[2], (*b)[3]};
  }
  if (const auto* v = get("cell_width_km")) {
    auto w = ParseNumber<double>("cell_width_km", *v);
    if (!w.ok()) return w.status();
    ds.cell_width_km = *w;
  }
  if (const auto* v = get("binomial_k")) {
    auto k = ParseNumber<int>("binomial_k", *v);
    if (!k.ok()) return k.status();
    ds.binomial_k = *k;
  }
  if (const auto* v = get("binomial_p")) {
    auto p = ParseNumber<double>("binomial_p", *v);
    if (!p.ok()) return p.status();
    ds.binomial_p = *p;
  }
  if (const auto* v = get("uniform_values")) {
    for (const std::string& item : SplitList(*v)) {
      auto value = ParseNumber<std::int64_t>("uniform_values", item);
      if (!value.ok()) return value.status();
      ds.uniform_values.push_back(*value);
    }
  }
  if (const auto* v = get("dataset_weights")) {
    auto w = ParseDoubleList(*v);
    if (!w.ok()) return w.status();
    ds.weights = *w;
  }
  if (const auto* v = get("n")) {
    auto n = ParseNumber<std::int64_t>("n", *v);
    if (!n.ok()) return n.status();
    ds.n = *n;
  }

  if (const auto* v = get("mechanism")) {
    config.mechanism = *v;
  } else {
    return ConfigError("missing key 'mechanism'");
  }
  if (const auto* v = get("eps")) {
    auto eps = ParseDoubleList(*v);
    if (!eps.ok()) return eps.status();
    config.eps = *eps;
  } else if (config.mechanism != "identity") {
    return ConfigError("missing key 'eps'");
  } else {
    config.eps = {0.0};
  }
  if (const auto* v = get("estimators")) {
    for (const std::string& item : SplitList(*v)) {
      auto e = ParseEstimator(item);
      if (!e.ok()) return e.status();
      config.estimators.push_back(*e);
    }
  } else {
    config.estimators = {Estimator::kIbu};
  }
  if (const auto* v = get("metrics")) {
    config.metrics.clear();
    for (const std::string& item : SplitList(*v)) {
      auto m = ParseMetric(item);
      if (!m.ok()) return m.status();
      config.metrics.push_back(*m);
    }
  }
  if (const auto* v = get("replications")) {
    auto r = ParseNumber<int>("replications", *v);
    if (!r.ok()) return r.status();
    config.replications = *r;
  }
  if (const auto* v = get("seed")) {
    auto s = ParseNumber<std::uint64_t>("seed", *v);
    if (!s.ok()) return s.status();
    config.master_seed = *s;
  }
  if (const auto* v = get("out")) config.out = *v;
  if (const auto* v = get("summary_out")) config.summary_out = *v;
  if (const auto* v = get("ibu_delta")) {
    auto d = ParseNumber<double>("ibu_delta", *v);
    if (!d.ok()) return d.status();
    config.ibu_delta = *d;
  }
  if (const auto* v = get("ibu_max_iter")) {
    auto m = ParseNumber<int>("ibu_max_iter", *v);
    if (!m.ok()) return m.status();
    config.ibu_max_iter = *m;
  }
  if (const auto* v = get("likely_subset")) {
    auto b = ParseBool("likely_subset", *v);
    if (!b.ok()) return b.status();
    config.likely_subset = *b;
  }
  if (const auto* v = get("rappor_post")) {
    if (*v != "normalize" && *v != "project") {
      return ConfigError("rappor_post must be normalize or project");
    }
    config.rappor_project = *v == "project";
  }
  if (const auto* v = get("record_runtime")) {
    auto b = ParseBool("record_runtime", *v);
    if (!b.ok()) return b.status();
    config.record_runtime = *b;
  }
  if (const auto* v = get("threads")) {
    auto t = ParseNumber<int>("threads", *v);
    if (!t.ok()) return t.status();
    config.threads = *t;
  }
  if (absl::Status s = ValidateExperimentConfig(config); !s.ok()) return s;
  return config;
}

absl::Status ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.replications < 1) return ConfigError("replications must be >= 1");
  if (config.threads < 1) return ConfigError("threads must be >= 1");
  if (config.eps.empty()) return ConfigError("eps grid is empty");
  if (config.estimators.empty()) return ConfigError("no estimators listed");
  if (config.metrics.empty()) return ConfigError("no metrics listed");
  if (!(config.ibu_delta > 0.0) || config.ibu_max_iter < 1) {
    return ConfigError("ibu_delta must be > 0 and ibu_max_iter >= 1");
  }
  absl::StatusOr<MechanismKind> kind = ParseMechanismKind(config.mechanism);
  if (!kind.ok()) return ConfigError(kind.status().message());
  const bool square_finite =
      *kind != MechanismKind::kGeometricLinear &&
      *kind != MechanismKind::kRappor &&
      *kind != MechanismKind::kLaplacePlanarContinuous &&
      *kind != MechanismKind::kCustom;
  for (Estimator e : config.estimators) {
    if ((e == Estimator::kInvN || e == Estimator::kInvP) && !square_finite) {
      return ConfigError(absl::StrCat(
          "IncompatibleEstimator: ", EstimatorName(e),
          " needs a square finite mechanism, not ", config.mechanism));
    }
    if (e == Estimator::kRapporDecode && *kind != MechanismKind::kRappor) {
      return ConfigError(
          "IncompatibleEstimator: rappor-decode needs the rappor mechanism");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec,
                                    std::uint64_t master_seed) {
  Rng rng = DeriveStream(master_seed, kDatasetStreamIndex);
  auto alphabet_or = [&spec](const std::string& fallback) {
    return ParseAlphabetSpec(spec.alphabet.value_or(fallback));
  };
  auto need_n = [&spec]() -> absl::Status {
    if (spec.n < 1) return ConfigError("synthetic datasets need n >= 1");
    return absl::OkStatus();
  };
  if (spec.kind == "ages_csv") {
    if (spec.path.empty()) return ConfigError("ages_csv needs dataset_path");
    return LoadAges(spec.path, spec.column);
  }
  if (spec.kind == "checkins_csv") {
    if (spec.path.empty() || !spec.bbox) {
      return ConfigError("checkins_csv needs dataset_path and bbox");
    }
    absl::StatusOr<Alphabet> grid =
        GridForBoundingBox(*spec.bbox, spec.cell_width_km);
    if (!grid.ok()) return ConfigError(grid.status().message());
    return LoadCheckins(spec.path, *spec.bbox, *grid);
  }
  if (auto s = need_n(); !s.ok()) return s;
  SyntheticSpec synthetic;
  if (spec.kind == "binomial") {
    synthetic = BinomialSpec{spec.binomial_k, spec.binomial_p};
  } else if (spec.kind == "uniform") {
    if (spec.uniform_values.empty()) {
      return ConfigError("uniform needs uniform_values");
    }
    const std::int64_t hi =
        *std::max_element(spec.uniform_values.begin(), spec.uniform_values.end());
    absl::StatusOr<Alphabet> alphabet =
        alphabet_or(absl::StrCat("range:0:", std::max<std::int64_t>(hi, 0)));
    if (!alphabet.ok()) return alphabet.status();
    UniformOnSpec u{.alphabet = *alphabet};
    for (std::int64_t v : spec.uniform_values) {
      const auto index = alphabet->IndexOf(Report(v));
      if (!index) {
        return ConfigError(absl::StrCat("uniform value ", v,
                                        " is outside the alphabet"));
      }
      u.members.push_back(*index);
    }
    synthetic = std::move(u);
  } else if (spec.kind == "ages_like") {
    synthetic = ExplicitSpec{AgesLikeDistribution()};
  } else if (spec.kind == "explicit") {
    if (!spec.alphabet) return ConfigError("explicit needs an alphabet");
    absl::StatusOr<Alphabet> alphabet = ParseAlphabetSpec(*spec.alphabet);
    if (!alphabet.ok()) return alphabet.status();
    absl::StatusOr<Distribution> d =
        Distribution::Create(*alphabet, spec.weights);
    if (!d.ok()) return ConfigError(d.status().message());
    synthetic = ExplicitSpec{*d};
  } else {
    return ConfigError(absl::StrCat("unknown dataset kind '", spec.kind, "'"));
  }
  absl::StatusOr<Dataset> data = SampleSynthetic(synthetic, spec.n, rng);
  if (!data.ok()) return ConfigError(data.status().message());
  return data;
}

}  // namespace ldp
