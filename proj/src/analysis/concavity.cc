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

#include "ldp/analysis/concavity.h"

#include <algorithm>
#include <cmath>

#include "Eigen/SVD"

namespace ldp {
namespace {

int RankFromSingularValues(const Eigen::VectorXd& s, Eigen::Index rows,
                           Eigen::Index cols, double tol) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold =
      tol * s(0) * static_cast<double>(std::max(rows, cols));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > threshold ? 1 : 0;
  return rank;
}

}  // namespace

int NumericalRank(const Eigen::MatrixXd& a, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return RankFromSingularValues(svd.singularValues(), a.rows(), a.cols(), tol);
}

ConcavityReport StrictConcavityCheck(const ObsMatrix& g, double tol) {
  const Eigen::Index k = static_cast<Eigen::Index>(g.rows());
  const Eigen::Index m = static_cast<Eigen::Index>(g.cols());
  Eigen::MatrixXd a(k, m + 1);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double peak = g.matrix().col(j).maxCoeff();
    a.col(j) = peak > 0.0 ? Eigen::VectorXd(g.matrix().col(j) / peak)
                          : Eigen::VectorXd(g.matrix().col(j));
  }
  a.col(m).setOnes();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU);
  ConcavityReport report;
  report.rank_required = static_cast<int>(k);
  report.rank_found =
      RankFromSingularValues(svd.singularValues(), a.rows(), a.cols(), tol);
  report.strictly_concave = report.rank_found == report.rank_required;
  if (!report.strictly_concave) {
    // Left singular vectors past the numerical rank span {w : w [G|1] = 0}.
    Eigen::VectorXd w = svd.matrixU().col(report.rank_found);
    const double scale = w.cwiseAbs().maxCoeff();
    w /= scale;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (std::fabs(w(i)) > 1e-9) {
        if (w(i) < 0.0) w = -w;
        break;
      }
    }
    report.witness = std::vector<double>(w.data(), w.data() + w.size());
  }
  return report;
}

bool IdentificationCheck(const Mechanism& mech, double tol) {
  return NumericalRank(mech.matrix(), tol) ==
         static_cast<int>(mech.input().size());
}

nlohmann::json ConcavityReportToJson(const ConcavityReport& report) {
  nlohmann::json j = {{"strictly_concave", report.strictly_concave},
                      {"rank_found", report.rank_found},
                      {"rank_required", report.rank_required}};
  j["witness"] = report.witness ? nlohmann::json(*report.witness)
                                : nlohmann::json(nullptr);
  return j;
}

}  // namespace ldp
