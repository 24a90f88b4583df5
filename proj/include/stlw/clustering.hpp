#pragma once

#include "stlw/grid.hpp"

#include <map>
#include <utility>
#include <vector>

namespace stlw {

// Cube index (k_t, k_x): cube I_k = [k_t H, (k_t+1) H] x [k_x H, (k_x+1) H],
// k_t >= 0.
using CubeIndex = std::pair<int, int>;

// A face listed with the orientation pointing out of the cluster that owns it.
struct DirectedFace {
  int face = 0;
  bool forward = true;  // true: stored left -> right orientation
};

struct CubeApproximation {
  const SpaceTimeGrid* grid = nullptr;
  double H = 0.0;
  double rho = 0.0;  // h_max / H
  std::map<CubeIndex, std::vector<int>> clusters;
  std::map<CubeIndex, std::vector<DirectedFace>> boundary_faces;
  // side groups keyed by (k, axis i in {0,1}, sign +:1 / -:0)
  std::map<std::tuple<int, int, int, int>, std::vector<DirectedFace>> side_faces;
  std::map<CubeIndex, std::vector<DirectedFace>> corner_faces;
  std::vector<CubeIndex> cell_cube;  // cell id -> owning cube
};

// Assigns every cell to the cube containing its centroid (ties to the
// lexicographically smallest admissible cube; non-convex fallback scans the
// bounding box for the first intersecting cube). Requires H > 2 h_max.
CubeApproximation cube_clustering(const SpaceTimeGrid& grid, double H);

struct ClusteringDiagnostics {
  double corner_fraction = 0.0;
  double max_normal_defect = 0.0;
  int interior_cubes = 0;
};

// Empirical counterparts of the corner-measure and normal-integral estimates,
// evaluated over cubes whose 2 h_max neighbourhood stays inside the slab
// (except toward t = 0, where initial faces form the lower side group).
ClusteringDiagnostics clustering_diagnostics(const CubeApproximation& ca);

}  // namespace stlw
