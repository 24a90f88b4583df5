#include "stlw/grid_build.hpp"

#include "stlw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stlw {

namespace {

void check_domain(double h, double T, double x_lo, double x_hi) {
  if (!(h > 0.0)) throw std::invalid_argument("grid: h must be positive");
  if (!(T > 0.0) || !(x_hi > x_lo)) throw std::invalid_argument("grid: degenerate domain");
}

int snap_count(double extent, double step) {
  return std::max(1, int(std::llround(extent / step)));
}

std::vector<double> lattice(double lo, double hi, int n) {
  const double d = (hi - lo) / n;
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = lo + i * d;
  v[0] = lo;
  v[n] = hi;
  return v;
}

Cell make_rect(int id, int layer, double t0, double t1, double x0, double x1) {
  Cell c;
  c.id = id;
  c.layer = layer;
  c.vertices = {Vec2(t0, x0), Vec2(t1, x0), Vec2(t1, x1), Vec2(t0, x1)};
  c.volume = (t1 - t0) * (x1 - x0);
  return c;
}

void finalize(SpaceTimeGrid& g, double h, double T, double x_lo, double x_hi, GridFamily fam) {
  g.h = h;
  g.T = T;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.family = fam;
  assemble_faces(g);
}

}  // namespace

SpaceTimeGrid build_uniform_grid(double h, double lambda, double T, double x_lo, double x_hi) {
  check_domain(h, T, x_lo, x_hi);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("grid: lambda in (0,1]");
  const int nx = snap_count(x_hi - x_lo, h);
  const int nt = snap_count(T, lambda * h);
  const auto xs = lattice(x_lo, x_hi, nx);
  const auto ts = lattice(0.0, T, nt);
  SpaceTimeGrid g;
  g.cells.reserve(std::size_t(nx) * nt);
  for (int n = 0; n < nt; ++n)
    for (int j = 0; j < nx; ++j)
      g.cells.push_back(make_rect(int(g.cells.size()), n, ts[n], ts[n + 1], xs[j], xs[j + 1]));
  finalize(g, h, T, x_lo, x_hi, GridFamily::Uniform);
  return g;
}

SpaceTimeGrid build_staggered_grid(double h, double dt, double T, double x_lo, double x_hi) {
  check_domain(h, T, x_lo, x_hi);
  if (!(dt > 0.0)) throw std::invalid_argument("grid: dt must be positive");
  const int nx = snap_count(x_hi - x_lo, h);
  const int nt = snap_count(T, dt);
  const auto ts = lattice(0.0, T, nt);
  const double dx = (x_hi - x_lo) / nx;
  const auto xs_e = lattice(x_lo, x_hi, nx);
  std::vector<double> xs_o(nx + 2);
  xs_o[0] = x_lo;
  for (int j = 1; j <= nx; ++j) xs_o[j] = x_lo + (j - 0.5) * dx;
  xs_o[nx + 1] = x_hi;
  SpaceTimeGrid g;
  for (int n = 0; n < nt; ++n) {
    const auto& xs = (n % 2 == 0) ? xs_e : xs_o;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j)
      g.cells.push_back(make_rect(int(g.cells.size()), n, ts[n], ts[n + 1], xs[j], xs[j + 1]));
  }
  finalize(g, h, T, x_lo, x_hi, GridFamily::Staggered);
  return g;
}

SpaceTimeGrid build_local_timestep_grid(double h, double lambda, const RefineRegion& region,
                                        double T, double x_lo, double x_hi) {
  check_domain(h, T, x_lo, x_hi);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("grid: lambda in (0,1]");
  if (region.factor < 1) throw std::invalid_argument("grid: refinement factor must be >= 1");
  const int nx = snap_count(x_hi - x_lo, h);
  const int nt = snap_count(T, lambda * h);
  const int r = region.factor;
  const auto xs = lattice(x_lo, x_hi, nx);
  const auto tf = lattice(0.0, T, nt * r);  // fine time lattice; coarse slabs use every r-th
  const double dx = (x_hi - x_lo) / nx;
  const double tol = 1e-9 * std::max(1.0, x_hi - x_lo);
  const int ja = int(std::llround((region.x0 - x_lo) / dx));
  const int jb = int(std::llround((region.x1 - x_lo) / dx));
  if (ja < 0 || jb > nx || ja >= jb || std::abs(region.x0 - xs[ja]) > tol ||
      std::abs(region.x1 - xs[jb]) > tol)
    throw std::invalid_argument("grid: refine region not aligned to x-breakpoints");
  SpaceTimeGrid g;
  for (int n = 0; n < nt; ++n) {
    for (int j = 0; j < nx; ++j) {
      if (j >= ja && j < jb) {
        for (int s = 0; s < r; ++s)
          g.cells.push_back(make_rect(int(g.cells.size()), n * r + s, tf[n * r + s],
                                      tf[n * r + s + 1], xs[j], xs[j + 1]));
      } else {
        g.cells.push_back(
            make_rect(int(g.cells.size()), n * r, tf[n * r], tf[(n + 1) * r], xs[j], xs[j + 1]));
      }
    }
  }
  finalize(g, h, T, x_lo, x_hi, GridFamily::LocalTimestep);
  return g;
}

SpaceTimeGrid build_moving_vertex_grid(double h, double lambda, double T, double x_lo,
                                       double x_hi,
                                       const std::function<double(double, double)>& vertex_velocity) {
  check_domain(h, T, x_lo, x_hi);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("grid: lambda in (0,1]");
  const int nx = snap_count(x_hi - x_lo, h);
  const int nt = snap_count(T, lambda * h);
  const auto ts = lattice(0.0, T, nt);
  std::vector<std::vector<double>> X(nt + 1, std::vector<double>(nx + 1));
  X[0] = lattice(x_lo, x_hi, nx);
  for (int n = 0; n < nt; ++n) {
    const double dt = ts[n + 1] - ts[n];
    X[n + 1][0] = x_lo;
    X[n + 1][nx] = x_hi;
    for (int j = 1; j < nx; ++j) X[n + 1][j] = X[n][j] + dt * vertex_velocity(ts[n], X[n][j]);
    for (int j = 0; j < nx; ++j)
      if (!(X[n + 1][j + 1] > X[n + 1][j]))
        throw GridConstructionError("moving-vertex grid: cell inversion advancing to layer " +
                                    std::to_string(n + 1));
  }
  SpaceTimeGrid g;
  for (int n = 0; n < nt; ++n) {
    for (int j = 0; j < nx; ++j) {
      Cell c;
      c.id = int(g.cells.size());
      c.layer = n;
      c.vertices = {Vec2(ts[n], X[n][j]), Vec2(ts[n + 1], X[n + 1][j]),
                    Vec2(ts[n + 1], X[n + 1][j + 1]), Vec2(ts[n], X[n][j + 1])};
      c.volume = polygon_area(c.vertices);
      if (!(c.volume > 0.0))
        throw GridConstructionError("moving-vertex grid: non-positive cell area in layer " +
                                    std::to_string(n));
      g.cells.push_back(std::move(c));
    }
  }
  finalize(g, h, T, x_lo, x_hi, GridFamily::MovingVertex);
  return g;
}

SpaceTimeGrid build_perturbed_triangulated_grid(double h, double T, double x_lo, double x_hi,
                                                std::uint64_t seed, double jitter) {
  check_domain(h, T, x_lo, x_hi);
  if (!(jitter >= 0.0 && jitter < 0.3))
    throw std::invalid_argument("grid: jitter must lie in [0, 0.3)");
  const int nx = snap_count(x_hi - x_lo, h);
  const int nt = snap_count(T, h);
  const auto xs = lattice(x_lo, x_hi, nx);
  const auto ts = lattice(0.0, T, nt);
  const double amp = jitter * std::min((x_hi - x_lo) / nx, T / nt);
  std::vector<std::vector<Vec2>> V(nt + 1, std::vector<Vec2>(nx + 1));
  for (int n = 0; n <= nt; ++n)
    for (int j = 0; j <= nx; ++j) {
      Vec2 p(ts[n], xs[j]);
      if (n > 0 && n < nt && j > 0 && j < nx) {
        SplitMix64 rng(seed ^ (std::uint64_t(n) << 32) ^ std::uint64_t(j) ^ 0x5bf03635ULL);
        p[0] += rng.uniform(-amp, amp);
        p[1] += rng.uniform(-amp, amp);
      }
      V[n][j] = p;
    }
  SpaceTimeGrid g;
  auto add_tri = [&g](int layer, const Vec2& a, const Vec2& b, const Vec2& c) {
    Cell cell;
    cell.id = int(g.cells.size());
    cell.layer = layer;
    cell.vertices = {a, b, c};
    cell.volume = polygon_area(cell.vertices);
    if (!(cell.volume > 0.0))
      throw GridConstructionError("triangulated grid: degenerate triangle in layer " +
                                  std::to_string(layer));
    g.cells.push_back(std::move(cell));
  };
  for (int n = 0; n < nt; ++n) {
    for (int j = 0; j < nx; ++j) {
      const Vec2& p00 = V[n][j];
      const Vec2& p10 = V[n + 1][j];
      const Vec2& p11 = V[n + 1][j + 1];
      const Vec2& p01 = V[n][j + 1];
      if ((n + j) % 2 == 0) {
        add_tri(n, p00, p10, p11);
        add_tri(n, p00, p11, p01);
      } else {
        add_tri(n, p00, p10, p01);
        add_tri(n, p10, p11, p01);
      }
    }
  }
  finalize(g, h, T, x_lo, x_hi, GridFamily::PerturbedTriangulated);
  return g;
}

SpaceTimeGrid insert_remap_layer(const SpaceTimeGrid& grid, double t_remap,
                                 std::vector<double> bp) {
  const double tol = 1e-12 * std::max(1.0, grid.T);
  int split_layer = -1;
  for (int l = 1; l < grid.num_layers(); ++l)
    if (std::abs(grid.layer_t0[l] - t_remap) <= tol) split_layer = l;
  if (split_layer < 0)
    throw std::invalid_argument("insert_remap_layer: t_remap is not a layer boundary");
  const double t_exact = grid.layer_t0[split_layer];

  if (bp.size() < 2 || !std::is_sorted(bp.begin(), bp.end()))
    throw std::invalid_argument("insert_remap_layer: breakpoints must be sorted");
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    if (!(bp[i] < bp[i + 1]))
      throw std::invalid_argument("insert_remap_layer: repeated breakpoint");
  if (std::abs(bp.front() - grid.x_lo) > tol || std::abs(bp.back() - grid.x_hi) > tol)
    throw std::invalid_argument("insert_remap_layer: breakpoints must span the domain");
  bp.front() = grid.x_lo;
  bp.back() = grid.x_hi;

  SpaceTimeGrid g;
  for (const Cell& c : grid.cells) {
    if (c.layer >= split_layer) continue;
    Cell copy = c;
    copy.id = int(g.cells.size());
    g.cells.push_back(std::move(copy));
  }
  for (int l = split_layer; l < grid.num_layers(); ++l) {
    const double t0 = grid.layer_t0[l];
    const double t1 = grid.layer_t1[l];
    for (int cid : grid.layers[l]) {
      const Cell& c = grid.cells[cid];
      if (c.vertices.size() != 4)
        throw std::invalid_argument("insert_remap_layer: layers above t_remap must be rectangular");
      for (const Vec2& v : c.vertices)
        if (v[0] != t0 && v[0] != t1)
          throw std::invalid_argument("insert_remap_layer: layers above t_remap must be slabs");
    }
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
      g.cells.push_back(make_rect(int(g.cells.size()), l, t0, t1, bp[i], bp[i + 1]));
  }
  g.remap_times = grid.remap_times;
  g.remap_times.push_back(t_exact);
  finalize(g, grid.h, grid.T, grid.x_lo, grid.x_hi, grid.family);
  return g;
}

}  // namespace stlw
