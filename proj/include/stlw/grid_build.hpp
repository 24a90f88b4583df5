#pragma once

#include "stlw/grid.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace stlw {

struct GridConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor grid of h-wide columns and lambda*h-thick time slabs.
SpaceTimeGrid build_uniform_grid(double h, double lambda, double T, double x_lo, double x_hi);

// Alternating aligned/offset layers of thickness dt; odd layers shifted by
// h/2 so every interior time face couples one cell below to one cell above
// across a half-width segment.
SpaceTimeGrid build_staggered_grid(double h, double dt, double T, double x_lo, double x_hi);

struct RefineRegion {
  double x0 = 0.0;
  double x1 = 0.0;
  int factor = 1;  // time-refinement factor r
};

// Uniform grid whose coarse time slabs are split into `factor` sub-slabs
// inside [region.x0, region.x1]; hanging faces at the region boundary are
// split so every face keeps exactly two adjacent cells.
SpaceTimeGrid build_local_timestep_grid(double h, double lambda, const RefineRegion& region,
                                        double T, double x_lo, double x_hi);

// Vertex x-positions advected with explicit Euler per layer; boundary
// vertices stay pinned so the slab is tiled exactly.
SpaceTimeGrid build_moving_vertex_grid(double h, double lambda, double T, double x_lo,
                                       double x_hi,
                                       const std::function<double(double, double)>& vertex_velocity);

// Jittered lattice split into triangles; exercises genuinely unstructured
// cluster boundaries. Deterministic in `seed`.
SpaceTimeGrid build_perturbed_triangulated_grid(double h, double T, double x_lo, double x_hi,
                                                std::uint64_t seed, double jitter = 0.15);

// Rebuilds all cells above t_remap on the given spatial partition; the face
// hyperplane at t_remap then consists of the pairwise overlap segments.
SpaceTimeGrid insert_remap_layer(const SpaceTimeGrid& grid, double t_remap,
                                 std::vector<double> new_breakpoints);

}  // namespace stlw
