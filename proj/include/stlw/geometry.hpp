#pragma once

#include "stlw/types.hpp"

#include <vector>

namespace stlw {

// Signed shoelace area of a polygon in the (t, x) plane; positive for
// counterclockwise vertex order.
double polygon_area(const std::vector<Vec2>& verts);

// Area centroid of a simple polygon.
Vec2 polygon_centroid(const std::vector<Vec2>& verts);

// Polygon diameter = max pairwise vertex distance (exact for polygons).
double polygon_diameter(const std::vector<Vec2>& verts);

double polygon_perimeter(const std::vector<Vec2>& verts);

// Clip a convex polygon against the half-plane n . y <= c.
std::vector<Vec2> clip_convex(const std::vector<Vec2>& verts, const Vec2& n, double c);

// Distance from point p to segment [a, b].
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Distance between a segment and a polygon (0 when they touch or intersect).
double segment_polygon_distance(const Vec2& a, const Vec2& b, const std::vector<Vec2>& verts);

// Axis-aligned bounding box.
struct BBox {
  double t_lo, t_hi, x_lo, x_hi;
};
BBox polygon_bbox(const std::vector<Vec2>& verts);

// Whether a polygon intersects the closed axis-aligned rectangle
// [t0,t1] x [x0,x1] (boundary contact counts).
bool polygon_intersects_rect(const std::vector<Vec2>& verts, double t0, double t1, double x0,
                             double x1);

}  // namespace stlw
