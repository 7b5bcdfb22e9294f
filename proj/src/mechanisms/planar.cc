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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldp/mechanisms/mechanisms.h"

namespace ldp {
namespace {

constexpr double kRingMassCutoff = 1e-12;
constexpr int kMaxRings = 5000;

template <typename Weight>
absl::StatusOr<Eigen::MatrixXd> FoldedLatticeMatrix(const Alphabet& input,
                                                    const Alphabet& output,
                                                    const Weight& weight) {
  const int cols = output.grid_cols();
  const int rows = output.grid_rows();
  const double w = output.cell_width_km();
  const PlanarPoint origin = output.centers().front();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(input.size()),
      static_cast<Eigen::Index>(output.size()));

  for (std::size_t x = 0; x < input.size(); ++x) {
    const PlanarPoint px = input.centers()[x];
    auto row = m.row(static_cast<Eigen::Index>(x));
    auto add_cell = [&](int i, int j) {
      const PlanarPoint s{origin.x_km + i * w, origin.y_km + j * w};
      const double mass = weight(EuclideanDistance(px, s));
      const int ci = std::clamp(i, 0, cols - 1);
      const int cj = std::clamp(j, 0, rows - 1);
      row(cj * cols + ci) += mass;
      return mass;
    };
    double total = 0.0;
    for (int j = 0; j < rows; ++j) {
      for (int i = 0; i < cols; ++i) total += add_cell(i, j);
    }
    // Rings grow until they lie beyond x and add negligible mass.
    const double gx = (px.x_km - origin.x_km) / w;
    const double gy = (px.y_km - origin.y_km) / w;
    const double beyond = std::max({-gx, gx - (cols - 1), -gy, gy - (rows - 1),
                                    0.0});
    int r = 1;
    for (; r <= kMaxRings; ++r) {
      double ring = 0.0;
      for (int i = -r; i <= cols - 1 + r; ++i) {
        ring += add_cell(i, -r);
        ring += add_cell(i, rows - 1 + r);
      }
      for (int j = -r + 1; j <= rows - 2 + r; ++j) {
        ring += add_cell(-r, j);
        ring += add_cell(cols - 1 + r, j);
      }
      total += ring;
      if (r > beyond && ring < kRingMassCutoff * total) break;
    }
    if (r > kMaxRings) {
      return absl::ResourceExhaustedError(
          "epsilon too small: planar lattice did not converge within the "
          "ring limit");
    }
    row /= total;
  }
  return m;
}

absl::Status CheckGrid(const Alphabet& grid, absl::string_view what) {
  if (grid.kind() != Alphabet::Kind::kPlanar || !grid.IsFullGrid()) {
    return absl::InvalidArgumentError(
        absl::StrCat("GridMismatch: ", what, " must be a full planar grid"));
  }
  return absl::OkStatus();
}

absl::Status CheckGeoEpsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "NonPositiveEpsilon: geo-indistinguishability parameter ", eps,
        " must be positive"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Mechanism> BuildGeometricPlanar(const Alphabet& input_grid,
                                               const Alphabet& output_grid,
                                               double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  if (absl::Status s = CheckGrid(input_grid, "input"); !s.ok()) return s;
  if (absl::Status s = CheckGrid(output_grid, "output"); !s.ok()) return s;
  if (std::fabs(input_grid.cell_width_km() - output_grid.cell_width_km()) >
      1e-9) {
    return absl::InvalidArgumentError(
        "GridMismatch: input and output grids have different cell widths");
  }
  absl::StatusOr<Eigen::MatrixXd> m = FoldedLatticeMatrix(
      input_grid, output_grid,
      [eps_geo](double d) { return std::exp(-eps_geo * d); });
  if (!m.ok()) return m.status();
  return Mechanism::FromMatrix(input_grid, output_grid, *std::move(m),
                               MechanismKind::kGeometricPlanar, eps_geo);
}

absl::StatusOr<Mechanism> BuildLaplacePlanarDiscretized(const Alphabet& grid,
                                                        double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  if (absl::Status s = CheckGrid(grid, "grid"); !s.ok()) return s;
  const double area = grid.cell_width_km() * grid.cell_width_km();
  const double scale = eps_geo * eps_geo / (2.0 * std::numbers::pi) * area;
  absl::StatusOr<Eigen::MatrixXd> m = FoldedLatticeMatrix(
      grid, grid,
      [eps_geo, scale](double d) { return scale * std::exp(-eps_geo * d); });
  if (!m.ok()) return m.status();
  return Mechanism::FromMatrix(grid, grid, *std::move(m),
                               MechanismKind::kLaplacePlanar, eps_geo);
}

absl::StatusOr<Mechanism> BuildLaplacePlanarContinuous(const Alphabet& grid,
                                                       double eps_geo) {
  if (absl::Status s = CheckGeoEpsilon(eps_geo); !s.ok()) return s;
  if (grid.kind() != Alphabet::Kind::kPlanar) {
    return absl::InvalidArgumentError(
        "planar Laplace needs a planar input alphabet");
  }
  std::vector<PlanarPoint> centers = grid.centers();
  const double norm = eps_geo * eps_geo / (2.0 * std::numbers::pi);
  auto kernel = [centers, norm, eps_geo](std::size_t x, const Report& z) {
    return norm *
           std::exp(-eps_geo * EuclideanDistance(centers[x],
                                                 std::get<PlanarPoint>(z)));
  };
  auto sampler = [centers, eps_geo](std::size_t x, Rng& rng) -> Report {
    // The radius of planar Laplace noise is Gamma(2, 1/eps).
    const double angle = 2.0 * std::numbers::pi * Uniform01(rng);
    const double radius = (Exponential(rng) + Exponential(rng)) / eps_geo;
    return PlanarPoint{centers[x].x_km + radius * std::cos(angle),
                       centers[x].y_km + radius * std::sin(angle)};
  };
  return Mechanism::FromKernel(grid, OutputDomain::kPlane, 0,
                               std::move(kernel), std::move(sampler),
                               MechanismKind::kLaplacePlanarContinuous,
                               eps_geo);
}

}  // namespace ldp
