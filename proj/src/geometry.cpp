#include "stlw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stlw {

double polygon_area(const std::vector<Vec2>& v) {
  double acc = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    acc += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * acc;
}

Vec2 polygon_centroid(const std::vector<Vec2>& v) {
  const std::size_t n = v.size();
  double a6 = 0.0;
  Vec2 c = Vec2::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % n];
    const double cross = p[0] * q[1] - q[0] * p[1];
    a6 += cross;
    c += (p + q) * cross;
  }
  return c / (3.0 * a6);
}

double polygon_diameter(const std::vector<Vec2>& v) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      d2 = std::max(d2, (v[i] - v[j]).squaredNorm());
  return std::sqrt(d2);
}

double polygon_perimeter(const std::vector<Vec2>& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += (v[(i + 1) % v.size()] - v[i]).norm();
  return acc;
}

std::vector<Vec2> clip_convex(const std::vector<Vec2>& verts, const Vec2& n, double c) {
  std::vector<Vec2> out;
  const std::size_t m = verts.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % m];
    const double da = n.dot(a) - c;
    const double db = n.dot(b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double s = da / (da - db);
      out.push_back(a + s * (b - a));
    }
  }
  return out;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double s = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + s * ab)).norm();
}

namespace {

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    const double v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return (v > 0.0) - (v < 0.0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on = [&](const Vec2& p, const Vec2& q, const Vec2& r) {
    return orient(p, q, r) == 0 && r[0] >= std::min(p[0], q[0]) && r[0] <= std::max(p[0], q[0]) &&
           r[1] >= std::min(p[1], q[1]) && r[1] <= std::max(p[1], q[1]);
  };
  return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& v) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i][1] > p[1]) != (v[j][1] > p[1])) {
      const double t = (p[1] - v[i][1]) / (v[j][1] - v[i][1]);
      if (p[0] < v[i][0] + t * (v[j][0] - v[i][0])) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

double segment_polygon_distance(const Vec2& a, const Vec2& b, const std::vector<Vec2>& verts) {
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i)
    if (segments_intersect(a, b, verts[i], verts[(i + 1) % n])) return 0.0;
  if (point_in_polygon(0.5 * (a + b), verts)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    d = std::min(d, point_segment_distance(verts[i], a, b));
    d = std::min(d, point_segment_distance(a, verts[i], verts[(i + 1) % n]));
    d = std::min(d, point_segment_distance(b, verts[i], verts[(i + 1) % n]));
  }
  return d;
}

BBox polygon_bbox(const std::vector<Vec2>& v) {
  BBox b{v[0][0], v[0][0], v[0][1], v[0][1]};
  for (const Vec2& p : v) {
    b.t_lo = std::min(b.t_lo, p[0]);
    b.t_hi = std::max(b.t_hi, p[0]);
    b.x_lo = std::min(b.x_lo, p[1]);
    b.x_hi = std::max(b.x_hi, p[1]);
  }
  return b;
}

bool polygon_intersects_rect(const std::vector<Vec2>& verts, double t0, double t1, double x0,
                             double x1) {
  std::vector<Vec2> poly = verts;
  poly = clip_convex(poly, Vec2(-1, 0), -t0);
  if (poly.empty()) return false;
  poly = clip_convex(poly, Vec2(1, 0), t1);
  if (poly.empty()) return false;
  poly = clip_convex(poly, Vec2(0, -1), -x0);
  if (poly.empty()) return false;
  poly = clip_convex(poly, Vec2(0, 1), x1);
  return !poly.empty();
}

}  // namespace stlw
