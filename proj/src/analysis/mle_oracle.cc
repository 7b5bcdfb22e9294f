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

#include "ldp/analysis/mle_oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/analysis/likelihood.h"

namespace ldp {
namespace {

constexpr int kRefinementLevels = 10;

// Visits every composition of `total` into counts.size() non-negative parts.
template <typename Visit>
void ForEachComposition(std::vector<int>& counts, std::size_t pos, int total,
                        Visit& visit) {
  if (pos + 1 == counts.size()) {
    counts[pos] = total;
    visit(counts);
    return;
  }
  for (int c = 0; c <= total; ++c) {
    counts[pos] = c;
    ForEachComposition(counts, pos + 1, total - c, visit);
  }
}

}  // namespace

absl::StatusOr<Distribution> MleOracle(const ObsMatrix& g, double grid_step) {
  const std::size_t k = g.rows();
  if (k > kMleOracleMaxAlphabet) {
    return absl::InvalidArgumentError(
        absl::StrCat("AlphabetTooLarge: the oracle supports |X| <= ",
                     kMleOracleMaxAlphabet, ", got ", k));
  }
  if (!(grid_step > 0.0) || grid_step > kMleOracleMaxStep) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid_step must lie in (0, ", kMleOracleMaxStep, "]"));
  }
  const int divisions = static_cast<int>(std::lround(1.0 / grid_step));

  std::vector<double> best(k, 0.0);
  double best_loglik = -std::numeric_limits<double>::infinity();
  bool have_best = false;
  std::vector<double> point(k);
  std::vector<int> counts(k);
  auto visit = [&](const std::vector<int>& c) {
    for (std::size_t i = 0; i < k; ++i) {
      point[i] = static_cast<double>(c[i]) / divisions;
    }
    const double loglik = LogLikelihood(g, point);
    if (!have_best || loglik > best_loglik) {
      best = point;
      best_loglik = loglik;
      have_best = true;
    }
  };
  ForEachComposition(counts, 0, divisions, visit);

  double step = 1.0 / divisions;
  for (int level = 0; level < kRefinementLevels; ++level) {
    step /= 2.0;
    bool improved = true;
    while (improved) {
      improved = false;
      std::size_t best_from = 0;
      std::size_t best_to = 0;
      double candidate_loglik = best_loglik;
      for (std::size_t from = 0; from < k; ++from) {
        if (best[from] < step * (1.0 - 1e-9)) continue;
        for (std::size_t to = 0; to < k; ++to) {
          if (to == from) continue;
          point = best;
          point[from] = std::max(0.0, point[from] - step);
          point[to] += step;
          const double loglik = LogLikelihood(g, point);
          if (loglik > candidate_loglik) {
            candidate_loglik = loglik;
            best_from = from;
            best_to = to;
            improved = true;
          }
        }
      }
      if (improved) {
        best[best_from] = std::max(0.0, best[best_from] - step);
        best[best_to] += step;
        best_loglik = candidate_loglik;
      }
    }
  }
  return Distribution::Create(g.input(), std::move(best));
}

}  // namespace ldp
