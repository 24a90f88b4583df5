#include "stlw/clustering.hpp"

#include "stlw/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace stlw {

namespace {

int tie_floor(double v, double H, bool nonnegative) {
  int k = int(std::floor(v / H));
  // centroid exactly on a cube edge: prefer the lexicographically smaller cube
  if (v == k * H && (!nonnegative || k > 0)) --k;
  return k;
}

bool cube_intersects_cell(const Cell& cell, const CubeIndex& k, double H) {
  return polygon_intersects_rect(cell.vertices, k.first * H, (k.first + 1) * H, k.second * H,
                                 (k.second + 1) * H);
}

}  // namespace

CubeApproximation cube_clustering(const SpaceTimeGrid& grid, double H) {
  const GridMetrics metrics = grid_metrics(grid);
  if (!(H > 2.0 * metrics.h_max))
    throw std::invalid_argument("cube_clustering: H must exceed 2 h_max");

  CubeApproximation ca;
  ca.grid = &grid;
  ca.H = H;
  ca.rho = metrics.h_max / H;
  ca.cell_cube.resize(grid.cells.size());

  for (const Cell& cell : grid.cells) {
    const Vec2 c = polygon_centroid(cell.vertices);
    CubeIndex k{tie_floor(c[0], H, true), tie_floor(c[1], H, false)};
    if (!cube_intersects_cell(cell, k, H)) {
      // non-convex fallback: first intersecting cube in lexicographic order
      const BBox bb = polygon_bbox(cell.vertices);
      bool found = false;
      for (int kt = std::max(0, int(std::floor(bb.t_lo / H)) - 1);
           !found && kt <= int(std::floor(bb.t_hi / H)) + 1; ++kt)
        for (int kx = int(std::floor(bb.x_lo / H)) - 1;
             !found && kx <= int(std::floor(bb.x_hi / H)) + 1; ++kx)
          if (cube_intersects_cell(cell, {kt, kx}, H)) {
            k = {kt, kx};
            found = true;
          }
      if (!found) throw std::runtime_error("cube_clustering: cell intersects no cube");
    }
    ca.cell_cube[cell.id] = k;
    ca.clusters[k].push_back(cell.id);
  }

  for (const Face& f : grid.faces) {
    if (f.kind == FaceKind::Interior) {
      const CubeIndex kc = ca.cell_cube[f.left];
      const CubeIndex kn = ca.cell_cube[f.right];
      if (kc == kn) continue;
      ca.boundary_faces[kc].push_back({f.id, true});
      ca.boundary_faces[kn].push_back({f.id, false});
      const int dt = kn.first - kc.first;
      const int dx = kn.second - kc.second;
      if (dt != 0 && dx == 0) {
        ca.side_faces[{kc.first, kc.second, 0, dt > 0 ? 1 : 0}].push_back({f.id, true});
        ca.side_faces[{kn.first, kn.second, 0, dt > 0 ? 0 : 1}].push_back({f.id, false});
      } else if (dx != 0 && dt == 0) {
        ca.side_faces[{kc.first, kc.second, 1, dx > 0 ? 1 : 0}].push_back({f.id, true});
        ca.side_faces[{kn.first, kn.second, 1, dx > 0 ? 0 : 1}].push_back({f.id, false});
      } else {
        ca.corner_faces[kc].push_back({f.id, true});
        ca.corner_faces[kn].push_back({f.id, false});
      }
    } else if (f.kind == FaceKind::Initial) {
      const CubeIndex k = ca.cell_cube[f.right];
      ca.boundary_faces[k].push_back({f.id, false});
      ca.side_faces[{k.first, k.second, 0, 0}].push_back({f.id, false});
    } else {
      const CubeIndex k = ca.cell_cube[f.left];
      ca.boundary_faces[k].push_back({f.id, true});
    }
  }
  return ca;
}

ClusteringDiagnostics clustering_diagnostics(const CubeApproximation& ca) {
  const SpaceTimeGrid& grid = *ca.grid;
  const double H = ca.H;
  const double margin = 2.0 * ca.rho * H;  // 2 h_max

  auto is_interior = [&](const CubeIndex& k) {
    if ((k.first + 1) * H + margin > grid.T) return false;
    if (k.second * H - margin < grid.x_lo) return false;
    if ((k.second + 1) * H + margin > grid.x_hi) return false;
    return true;
  };

  ClusteringDiagnostics d;
  KahanSum corner_measure, boundary_measure;
  for (const auto& [k, cells] : ca.clusters) {
    if (cells.empty() || !is_interior(k)) continue;
    ++d.interior_cubes;
    if (auto it = ca.boundary_faces.find(k); it != ca.boundary_faces.end())
      for (const DirectedFace& df : it->second) boundary_measure.add(grid.faces[df.face].measure);
    if (auto it = ca.corner_faces.find(k); it != ca.corner_faces.end())
      for (const DirectedFace& df : it->second) corner_measure.add(grid.faces[df.face].measure);
    for (int axis : {0, 1}) {
      for (int sign : {0, 1}) {
        Vec2 acc = Vec2::Zero();
        auto it = ca.side_faces.find({k.first, k.second, axis, sign});
        if (it != ca.side_faces.end()) {
          for (const DirectedFace& df : it->second) {
            const Face& f = grid.faces[df.face];
            acc += (df.forward ? 1.0 : -1.0) * f.measure * f.normal;
          }
        }
        Vec2 exact = Vec2::Zero();
        exact[axis] = (sign == 1 ? 1.0 : -1.0) * H;
        d.max_normal_defect = std::max(d.max_normal_defect, (acc - exact).norm() / H);
      }
    }
  }
  d.corner_fraction =
      boundary_measure.value() > 0.0 ? corner_measure.value() / boundary_measure.value() : 0.0;
  return d;
}

}  // namespace stlw
