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

#include "ldp/metrics/emd.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/metrics/distances.h"

namespace ldp {
namespace {

constexpr double kMassEpsilon = 1e-15;
constexpr double kInf = std::numeric_limits<double>::infinity();

absl::Status CheckSameAlphabet(const Distribution& p, const Distribution& q,
                               Alphabet::Kind kind) {
  if (!(p.alphabet() == q.alphabet())) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: distributions over different alphabets");
  }
  if (p.alphabet().kind() != kind) {
    return absl::InvalidArgumentError(
        "AlphabetMismatch: wrong alphabet kind for this metric");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<TransportSolution> SolveTransport(
    const std::vector<double>& supply, const std::vector<double>& demand,
    const Eigen::MatrixXd& cost) {
  const int s = static_cast<int>(supply.size());
  const int t = static_cast<int>(demand.size());
  if (cost.rows() != s || cost.cols() != t) {
    return absl::InvalidArgumentError("cost matrix shape mismatch");
  }
  TransportSolution solution;
  solution.plan = Eigen::MatrixXd::Zero(s, t);
  if (s == 0 || t == 0) return solution;

  // Node layout: sources [0, s), sinks [s, s + t), super sink s + t.
  const int nodes = s + t + 1;
  const int super_sink = s + t;
  std::vector<double> left_supply = supply;
  std::vector<double> left_demand = demand;
  std::vector<double> potential(nodes, 0.0);
  std::vector<double> dist(nodes);
  std::vector<int> parent(nodes);
  std::vector<char> done(nodes);
  Eigen::MatrixXd& flow = solution.plan;

  auto active_supply = [&] {
    for (double v : left_supply) {
      if (v > kMassEpsilon) return true;
    }
    return false;
  };
  auto active_demand = [&] {
    for (double v : left_demand) {
      if (v > kMassEpsilon) return true;
    }
    return false;
  };

  while (active_supply() && active_demand()) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    for (int i = 0; i < s; ++i) {
      if (left_supply[i] > kMassEpsilon) dist[i] = 0.0;
    }
    // Dense Dijkstra over reduced costs.
    for (;;) {
      int u = -1;
      for (int v = 0; v < nodes; ++v) {
        if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
      }
      if (u < 0 || u == super_sink) break;
      done[u] = 1;
      auto relax = [&](int v, double reduced) {
        const double nd = dist[u] + std::max(0.0, reduced);
        if (nd < dist[v]) {
          dist[v] = nd;
          parent[v] = u;
        }
      };
      if (u < s) {
        for (int j = 0; j < t; ++j) {
          relax(s + j, cost(u, j) + potential[u] - potential[s + j]);
        }
      } else {
        const int j = u - s;
        for (int i = 0; i < s; ++i) {
          if (flow(i, j) > kMassEpsilon) {
            relax(i, -cost(i, j) + potential[u] - potential[i]);
          }
        }
        if (left_demand[j] > kMassEpsilon) {
          relax(super_sink, potential[u] - potential[super_sink]);
        }
      }
    }
    if (!(dist[super_sink] < kInf)) {
      return absl::InternalError(
          "SolverNonConvergence: no augmenting path with remaining demand");
    }
    const double cap = dist[super_sink];
    for (int v = 0; v < nodes; ++v) potential[v] += std::min(dist[v], cap);

    // Walk the path back from the super sink and find its bottleneck.
    const int sink_node = parent[super_sink];
    double bottleneck = left_demand[sink_node - s];
    int v = sink_node;
    while (parent[v] >= 0) {
      const int u = parent[v];
      if (u >= s) bottleneck = std::min(bottleneck, flow(v, u - s));
      v = u;
    }
    const int source = v;
    bottleneck = std::min(bottleneck, left_supply[source]);

    v = sink_node;
    while (parent[v] >= 0) {
      const int u = parent[v];
      if (u < s) {
        flow(u, v - s) += bottleneck;
      } else {
        flow(v, u - s) = std::max(0.0, flow(v, u - s) - bottleneck);
      }
      v = u;
    }
    left_supply[source] -= bottleneck;
    left_demand[sink_node - s] -= bottleneck;
  }

  double violation = 0.0;
  double slack_flow = 0.0;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) {
      const double reduced = cost(i, j) + potential[i] - potential[s + j];
      violation = std::max(violation, -reduced);
      slack_flow += flow(i, j) * std::fabs(reduced);
      solution.cost += flow(i, j) * cost(i, j);
    }
  }
  solution.certificate_residual = violation + slack_flow;
  if (!(solution.certificate_residual < kTransportCertificateTolerance)) {
    return absl::InternalError(
        absl::StrCat("SolverNonConvergence: certificate residual ",
                     solution.certificate_residual));
  }
  return solution;
}

absl::StatusOr<double> Emd1d(const Distribution& p, const Distribution& q) {
  if (auto st = CheckSameAlphabet(p, q, Alphabet::Kind::kLinear); !st.ok()) {
    return st;
  }
  const auto& values = p.alphabet().values();
  double cdf_gap = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    cdf_gap += p[i] - q[i];
    total += std::fabs(cdf_gap) *
             static_cast<double>(values[i + 1] - values[i]);
  }
  return total;
}

absl::StatusOr<double> EmdPlanar(const Distribution& p,
                                 const Distribution& q) {
  if (auto st = CheckSameAlphabet(p, q, Alphabet::Kind::kPlanar); !st.ok()) {
    return st;
  }
  // With a metric ground cost, mass shared by p and q stays in place in some
  // optimal plan, so only the positive and negative parts are transported.
  std::vector<std::size_t> from;
  std::vector<std::size_t> to;
  std::vector<double> supply;
  std::vector<double> demand;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = p[i] - q[i];
    if (diff > 0.0) {
      from.push_back(i);
      supply.push_back(diff);
    } else if (diff < 0.0) {
      to.push_back(i);
      demand.push_back(-diff);
    }
  }
  Eigen::MatrixXd cost(static_cast<Eigen::Index>(from.size()),
                       static_cast<Eigen::Index>(to.size()));
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = 0; b < to.size(); ++b) {
      cost(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          p.alphabet().Distance(from[a], to[b]);
    }
  }
  auto solution = SolveTransport(supply, demand, cost);
  if (!solution.ok()) return solution.status();
  return solution->cost;
}

absl::StatusOr<double> Emd(const Distribution& p, const Distribution& q) {
  switch (p.alphabet().kind()) {
    case Alphabet::Kind::kLinear:
      return Emd1d(p, q);
    case Alphabet::Kind::kPlanar:
      return EmdPlanar(p, q);
    case Alphabet::Kind::kCategorical:
      return TotalVariation(p, q);
  }
  return absl::InternalError("unknown alphabet kind");
}

}  // namespace ldp
