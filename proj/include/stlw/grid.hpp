#pragma once

#include "stlw/types.hpp"

#include <string>
#include <vector>

namespace stlw {

// Polygonal space-time cell, vertices counterclockwise in the (t, x) plane.
struct Cell {
  int id = 0;
  int layer = 0;
  std::vector<Vec2> vertices;
  double volume = 0.0;  // shoelace area
};

enum class FaceKind { Interior, Initial, Boundary };

// Oriented face: straight segment with the unit normal pointing from `left`
// into `right`. Initial faces carry left = kExterior and normal (1, 0);
// other closure faces (top of slab, lateral sides) carry right = kExterior.
struct Face {
  int id = 0;
  Vec2 a = Vec2::Zero();
  Vec2 b = Vec2::Zero();
  int left = kExterior;
  int right = kExterior;
  Vec2 normal = Vec2::Zero();
  double measure = 0.0;
  FaceKind kind = FaceKind::Interior;
};

enum class GridFamily {
  Uniform,
  Staggered,
  LocalTimestep,
  MovingVertex,
  PerturbedTriangulated,
  Loaded,
};

struct SpaceTimeGrid {
  std::vector<Cell> cells;
  std::vector<Face> faces;
  std::vector<std::vector<int>> cell_faces;  // cell id -> face ids
  std::vector<std::vector<int>> layers;      // layer index -> cell ids
  std::vector<double> layer_t0;              // layer start times
  std::vector<double> layer_t1;              // layer end times
  double T = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double h = 0.0;  // declared mesh parameter
  GridFamily family = GridFamily::Uniform;
  std::vector<double> remap_times;  // hyperplanes introduced by insert_remap_layer

  int num_cells() const { return int(cells.size()); }
  int num_faces() const { return int(faces.size()); }
  int num_layers() const { return int(layers.size()); }

  bool is_remap_time(double t) const;
};

struct LayerStat {
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

struct GridMetrics {
  double h_max = 0.0;         // max cell diameter
  double quasi_ratio = 0.0;   // min over cells of V(C) / diam(C)^2
  double surface_ratio = 0.0; // max over cells of S(dC) / h_max
  LayerStat cells_per_layer;
};

GridMetrics grid_metrics(const SpaceTimeGrid& grid);

// Rebuilds faces, cell_faces, layer times from the cell list. Cells sharing a
// boundary must reference bitwise-identical coordinates where they meet; the
// generators guarantee this by computing each lattice value once. Collinear
// interfaces subdivided differently on the two sides (staggered layers,
// hanging faces, remap lines) are split at the union of breakpoints.
void assemble_faces(SpaceTimeGrid& grid);

// Structural checks: tiling, face cover, duality, normals. Throws on failure.
void validate_grid(const SpaceTimeGrid& grid);

// Convenience accessors.
double cell_x_min(const Cell& c);
double cell_x_max(const Cell& c);
double cell_t_min(const Cell& c);
double cell_t_max(const Cell& c);
// x-extent measured at the cell's mid time (V / dt for trapezoids).
double cell_x_extent_mid(const Cell& c);

}  // namespace stlw
