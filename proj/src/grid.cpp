#include "stlw/grid.hpp"

#include "stlw/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <stdexcept>

namespace stlw {

namespace {

double norm_zero(double v) { return v == 0.0 ? 0.0 : v; }

struct Interval {
  double lo, hi;
  int cell;
};

struct LineBucket {
  std::vector<Interval> minus;  // cells on the lower-coordinate side
  std::vector<Interval> plus;   // cells on the higher-coordinate side
};

// covering interval for [p, q] in a disjoint, lo-sorted interval list
const Interval* find_cover(const std::vector<Interval>& iv, double p, double q) {
  auto it = std::upper_bound(iv.begin(), iv.end(), p,
                             [](double v, const Interval& s) { return v < s.lo; });
  if (it == iv.begin()) return nullptr;
  --it;
  if (it->lo <= p && it->hi >= q) return &*it;
  return nullptr;
}

struct SlantKey {
  std::array<double, 4> v;
  bool operator<(const SlantKey& o) const {
    for (int i = 0; i < 4; ++i) {
      if (v[i] < o.v[i]) return true;
      if (v[i] > o.v[i]) return false;
    }
    return false;
  }
};

}  // namespace

bool SpaceTimeGrid::is_remap_time(double t) const {
  for (double r : remap_times)
    if (r == t) return true;
  return false;
}

void assemble_faces(SpaceTimeGrid& grid) {
  grid.faces.clear();
  grid.cell_faces.assign(grid.cells.size(), {});

  std::map<double, LineBucket> t_lines;
  std::map<double, LineBucket> x_lines;
  std::map<SlantKey, std::pair<int, Vec2>> pending_slant;  // key(a,b) -> (cell, a stored... )
  std::vector<Face> slant_faces;

  for (const Cell& cell : grid.cells) {
    const std::size_t n = cell.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = cell.vertices[i];
      const Vec2& b = cell.vertices[(i + 1) % n];
      if (a[0] == b[0]) {
        // constant-t edge; +x direction means the cell lies below the line
        LineBucket& bucket = t_lines[norm_zero(a[0])];
        if (b[1] > a[1])
          bucket.minus.push_back({a[1], b[1], cell.id});
        else
          bucket.plus.push_back({b[1], a[1], cell.id});
      } else if (a[1] == b[1]) {
        // constant-x edge; downward means the cell lies on the -x side
        LineBucket& bucket = x_lines[norm_zero(a[1])];
        if (b[0] < a[0])
          bucket.minus.push_back({b[0], a[0], cell.id});
        else
          bucket.plus.push_back({a[0], b[0], cell.id});
      } else {
        SlantKey rev{{b[0], b[1], a[0], a[1]}};
        auto it = pending_slant.find(rev);
        if (it != pending_slant.end()) {
          // the earlier edge's owner becomes `left`; orientation from its traversal
          const int left = it->second.first;
          Face f;
          f.a = Vec2(rev.v[0], rev.v[1]);
          f.b = Vec2(rev.v[2], rev.v[3]);
          const Vec2 d = f.b - f.a;
          f.measure = d.norm();
          f.normal = Vec2(d[1], -d[0]) / f.measure;
          f.left = left;
          f.right = cell.id;
          f.kind = FaceKind::Interior;
          slant_faces.push_back(f);
          pending_slant.erase(it);
        } else {
          pending_slant.emplace(SlantKey{{a[0], a[1], b[0], b[1]}},
                                std::make_pair(cell.id, a));
        }
      }
    }
  }
  if (!pending_slant.empty())
    throw std::runtime_error("assemble_faces: unmatched slanted edge (non-conforming cells)");

  auto push_face = [&grid](Face f) {
    f.id = int(grid.faces.size());
    if (f.left >= 0) grid.cell_faces[f.left].push_back(f.id);
    if (f.right >= 0) grid.cell_faces[f.right].push_back(f.id);
    grid.faces.push_back(std::move(f));
  };

  auto split_line = [&push_face](double coord, LineBucket& bucket, bool is_t_line,
                                 bool at_lower_boundary) {
    auto by_lo = [](const Interval& u, const Interval& v) { return u.lo < v.lo; };
    std::sort(bucket.minus.begin(), bucket.minus.end(), by_lo);
    std::sort(bucket.plus.begin(), bucket.plus.end(), by_lo);
    std::vector<double> bp;
    bp.reserve(2 * (bucket.minus.size() + bucket.plus.size()));
    for (const auto& s : bucket.minus) {
      bp.push_back(s.lo);
      bp.push_back(s.hi);
    }
    for (const auto& s : bucket.plus) {
      bp.push_back(s.lo);
      bp.push_back(s.hi);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
      const double p = bp[k], q = bp[k + 1];
      const Interval* lo_side = find_cover(bucket.minus, p, q);
      const Interval* hi_side = find_cover(bucket.plus, p, q);
      if (!lo_side && !hi_side) continue;
      // Endpoint order encodes orientation: normal == rot-90(b - a) / |b - a|.
      Face f;
      f.measure = q - p;
      if (lo_side && hi_side) {
        f.kind = FaceKind::Interior;
        f.left = lo_side->cell;
        f.right = hi_side->cell;
        f.normal = is_t_line ? Vec2(1, 0) : Vec2(0, 1);
      } else if (hi_side) {
        // only a cell above/right of the line: initial line (t = 0) or lateral x_lo
        if (is_t_line) {
          if (!at_lower_boundary)
            throw std::runtime_error("assemble_faces: uncovered interior time line");
          f.kind = FaceKind::Initial;
          f.left = kExterior;
          f.right = hi_side->cell;
          f.normal = Vec2(1, 0);
        } else {
          f.kind = FaceKind::Boundary;
          f.left = hi_side->cell;
          f.right = kExterior;
          f.normal = Vec2(0, -1);
        }
      } else {
        // only a cell below/left: top of slab or lateral x_hi
        f.kind = FaceKind::Boundary;
        f.left = lo_side->cell;
        f.right = kExterior;
        f.normal = is_t_line ? Vec2(1, 0) : Vec2(0, 1);
      }
      if (is_t_line) {
        f.a = Vec2(coord, p);
        f.b = Vec2(coord, q);
      } else if (f.normal[1] > 0.0) {
        f.a = Vec2(q, coord);
        f.b = Vec2(p, coord);
      } else {
        f.a = Vec2(p, coord);
        f.b = Vec2(q, coord);
      }
      push_face(std::move(f));
    }
  };

  for (auto& [coord, bucket] : t_lines) split_line(coord, bucket, true, coord == t_lines.begin()->first);
  for (auto& [coord, bucket] : x_lines) split_line(coord, bucket, false, false);
  for (Face& f : slant_faces) push_face(std::move(f));

  // layer bookkeeping
  int max_layer = -1;
  for (const Cell& c : grid.cells) max_layer = std::max(max_layer, c.layer);
  grid.layers.assign(max_layer + 1, {});
  grid.layer_t0.assign(max_layer + 1, std::numeric_limits<double>::infinity());
  grid.layer_t1.assign(max_layer + 1, -std::numeric_limits<double>::infinity());
  for (const Cell& c : grid.cells) {
    grid.layers[c.layer].push_back(c.id);
    for (const Vec2& v : c.vertices) {
      grid.layer_t0[c.layer] = std::min(grid.layer_t0[c.layer], v[0]);
      grid.layer_t1[c.layer] = std::max(grid.layer_t1[c.layer], v[0]);
    }
  }
}

GridMetrics grid_metrics(const SpaceTimeGrid& grid) {
  GridMetrics m;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_surface = 0.0;
  for (const Cell& c : grid.cells) {
    const double diam = polygon_diameter(c.vertices);
    m.h_max = std::max(m.h_max, diam);
    min_ratio = std::min(min_ratio, c.volume / (diam * diam));
    max_surface = std::max(max_surface, polygon_perimeter(c.vertices));
  }
  m.quasi_ratio = min_ratio;
  m.surface_ratio = max_surface / m.h_max;
  m.cells_per_layer.min = std::numeric_limits<int>::max();
  for (const auto& layer : grid.layers) {
    m.cells_per_layer.min = std::min<int>(m.cells_per_layer.min, int(layer.size()));
    m.cells_per_layer.max = std::max<int>(m.cells_per_layer.max, int(layer.size()));
  }
  m.cells_per_layer.mean = double(grid.cells.size()) / double(grid.layers.size());
  return m;
}

void validate_grid(const SpaceTimeGrid& grid) {
  const double slab_area = grid.T * (grid.x_hi - grid.x_lo);
  KahanSum vol;
  for (const Cell& c : grid.cells) {
    if (c.volume <= 0.0) throw std::runtime_error("validate_grid: non-positive cell volume");
    const double shoelace = polygon_area(c.vertices);
    if (std::abs(shoelace - c.volume) > 1e-12 * std::abs(shoelace))
      throw std::runtime_error("validate_grid: stored volume disagrees with shoelace");
    vol.add(c.volume);
  }
  if (std::abs(vol.value() - slab_area) > 1e-10 * slab_area)
    throw std::runtime_error("validate_grid: cells do not tile the slab");

  double initial_cover = 0.0;
  for (const Face& f : grid.faces) {
    const double len = (f.b - f.a).norm();
    if (!(f.measure > 0.0) || std::abs(len - f.measure) > 1e-12 * len)
      throw std::runtime_error("validate_grid: bad face measure");
    if (std::abs(f.normal.norm() - 1.0) > 1e-14)
      throw std::runtime_error("validate_grid: face normal not unit");
    const Vec2 d = f.b - f.a;
    if ((Vec2(d[1], -d[0]) / len - f.normal).norm() > 1e-14)
      throw std::runtime_error("validate_grid: normal disagrees with endpoint order");
    if (f.kind == FaceKind::Interior) {
      if (f.left < 0 || f.right < 0)
        throw std::runtime_error("validate_grid: interior face missing a cell");
      const Vec2 lr = polygon_centroid(grid.cells[f.right].vertices) -
                      polygon_centroid(grid.cells[f.left].vertices);
      if (lr.dot(f.normal) <= 0.0)
        throw std::runtime_error("validate_grid: interior normal orientation");
    } else if (f.kind == FaceKind::Initial) {
      if (f.left != kExterior || f.right < 0 || f.a[0] != 0.0 || f.b[0] != 0.0 ||
          f.normal != Vec2(1, 0))
        throw std::runtime_error("validate_grid: malformed initial face");
      initial_cover += f.measure;
    }
  }
  if (std::abs(initial_cover - (grid.x_hi - grid.x_lo)) > 1e-12 * (grid.x_hi - grid.x_lo))
    throw std::runtime_error("validate_grid: initial faces do not cover the initial line");

  for (const Cell& c : grid.cells) {
    KahanSum cover;
    for (int fid : grid.cell_faces[c.id]) cover.add(grid.faces[fid].measure);
    const double perim = polygon_perimeter(c.vertices);
    if (std::abs(cover.value() - perim) > 1e-12 * perim)
      throw std::runtime_error("validate_grid: faces do not cover cell boundary");
  }
}

double cell_x_min(const Cell& c) {
  double v = c.vertices[0][1];
  for (const Vec2& p : c.vertices) v = std::min(v, p[1]);
  return v;
}

double cell_x_max(const Cell& c) {
  double v = c.vertices[0][1];
  for (const Vec2& p : c.vertices) v = std::max(v, p[1]);
  return v;
}

double cell_t_min(const Cell& c) {
  double v = c.vertices[0][0];
  for (const Vec2& p : c.vertices) v = std::min(v, p[0]);
  return v;
}

double cell_t_max(const Cell& c) {
  double v = c.vertices[0][0];
  for (const Vec2& p : c.vertices) v = std::max(v, p[0]);
  return v;
}

double cell_x_extent_mid(const Cell& c) {
  return c.volume / (cell_t_max(c) - cell_t_min(c));
}

}  // namespace stlw
