#include "stlw/grid.hpp"
#include "stlw/grid_build.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace stlw;

namespace {

double slab_area(const SpaceTimeGrid& g) { return g.T * (g.x_hi - g.x_lo); }

double total_volume(const SpaceTimeGrid& g) {
  KahanSum s;
  for (const Cell& c : g.cells) s.add(c.volume);
  return s.value();
}

}  // namespace

TEST_CASE("uniform grid: counting example") {
  auto g = build_uniform_grid(0.5, 0.5, 0.5, 0.0, 1.0);
  CHECK(g.num_cells() == 4);
  CHECK(g.num_layers() == 2);
  // two initial segments of length 0.5 (four directed initial faces)
  int n_init = 0;
  for (const Face& f : g.faces)
    if (f.kind == FaceKind::Initial) {
      CHECK(f.measure == doctest::Approx(0.5));
      CHECK(f.normal == Vec2(1, 0));
      CHECK(f.left == kExterior);
      ++n_init;
    }
  CHECK(n_init == 2);
  CHECK(total_volume(g) == doctest::Approx(slab_area(g)).epsilon(1e-15));
  validate_grid(g);
}

TEST_CASE("uniform grid: tiling identity holds for many shapes") {
  for (auto [h, lambda, T, xl, xh] : {std::tuple{0.1, 0.5, 0.5, 0.0, 1.0},
                                      std::tuple{0.3, 1.0, 1.0, -2.0, 1.0},
                                      std::tuple{0.07, 0.25, 0.33, -1.0, 2.0}}) {
    auto g = build_uniform_grid(h, lambda, T, xl, xh);
    CHECK(std::abs(total_volume(g) - slab_area(g)) <= 1e-10 * slab_area(g));
    validate_grid(g);
  }
}

TEST_CASE("uniform grid: closed-form metrics") {
  auto g = build_uniform_grid(0.1, 0.5, 0.5, 0.0, 1.0);
  auto m = grid_metrics(g);
  CHECK(m.quasi_ratio == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(m.h_max == doctest::Approx(0.1 * std::sqrt(1.25)).epsilon(1e-13));
  CHECK(m.surface_ratio == doctest::Approx(2.0 * 1.5 / std::sqrt(1.25)).epsilon(1e-13));
  CHECK(m.cells_per_layer.min == 10);
  CHECK(m.cells_per_layer.max == 10);
}

TEST_CASE("uniform grid: metric ratios are scale invariant under refinement") {
  auto a = grid_metrics(build_uniform_grid(0.1, 0.5, 0.5, 0.0, 1.0));
  auto b = grid_metrics(build_uniform_grid(0.05, 0.5, 0.5, 0.0, 1.0));
  CHECK(std::abs(a.quasi_ratio - b.quasi_ratio) <= 1e-12);
  CHECK(std::abs(a.surface_ratio - b.surface_ratio) <= 1e-12);
}

TEST_CASE("uniform grid: rejects bad arguments") {
  CHECK_THROWS_AS(build_uniform_grid(-0.1, 0.5, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_uniform_grid(0.1, 0.0, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_uniform_grid(0.1, 0.5, 1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("staggered grid: half-face geometry") {
  auto g = build_staggered_grid(0.5, 0.125, 0.25, 0.0, 2.0);
  CHECK(g.num_layers() == 2);
  validate_grid(g);
  // interior E<->O time faces all have measure dx/2 = 0.25
  for (const Face& f : g.faces) {
    if (f.kind == FaceKind::Interior && f.normal == Vec2(1, 0))
      CHECK(f.measure == doctest::Approx(0.25).epsilon(1e-15));
  }
  // each O cell (layer 1) has exactly two faces to the layer below
  for (int cid : g.layers[1]) {
    int below = 0;
    for (int fid : g.cell_faces[cid]) {
      const Face& f = g.faces[fid];
      if (f.kind == FaceKind::Interior && f.normal == Vec2(1, 0) && f.right == cid) ++below;
    }
    const Cell& c = g.cells[cid];
    const bool end_cell = cell_x_min(c) == 0.0 || cell_x_max(c) == 2.0;
    CHECK(below == (end_cell ? 1 : 2));
  }
}

TEST_CASE("staggered grid: non-quasiuniform metrics for dt = h^3") {
  auto q = [](double h) {
    auto g = build_staggered_grid(h, h * h * h, 40 * h * h * h, 0.0, 1.0);
    return grid_metrics(g).quasi_ratio;
  };
  // derived oracle: full cells give h*dt / (h^2 + dt^2)
  const double h = 0.1, dt = 1e-3;
  CHECK(q(h) == doctest::Approx(h * dt / (h * h + dt * dt)).epsilon(1e-12));
  CHECK(q(h) == doctest::Approx(9.999e-3).epsilon(1e-3));
  // ratio approaches 4 per halving
  const double r1 = q(0.1) / q(0.05);
  const double r2 = q(0.05) / q(0.025);
  CHECK(r1 == doctest::Approx(4.0).epsilon(0.1));
  CHECK(r2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("local timestep grid: r=1 reduces to the uniform grid") {
  auto u = build_uniform_grid(0.1, 0.5, 0.5, 0.0, 1.0);
  auto l = build_local_timestep_grid(0.1, 0.5, {0.4, 0.6, 1}, 0.5, 0.0, 1.0);
  REQUIRE(u.num_cells() == l.num_cells());
  for (int i = 0; i < u.num_cells(); ++i) {
    CHECK(u.cells[i].layer == l.cells[i].layer);
    REQUIRE(u.cells[i].vertices.size() == l.cells[i].vertices.size());
    for (std::size_t k = 0; k < u.cells[i].vertices.size(); ++k)
      CHECK((u.cells[i].vertices[k] - l.cells[i].vertices[k]).norm() == 0.0);
  }
}

TEST_CASE("local timestep grid: refined region splits slabs and hanging faces") {
  auto g = build_local_timestep_grid(0.1, 0.5, {0.4, 0.6, 2}, 0.5, 0.0, 1.0);
  validate_grid(g);
  CHECK(std::abs(total_volume(g) - slab_area(g)) <= 1e-10 * slab_area(g));
  // cells inside the region have half the time extent
  for (const Cell& c : g.cells) {
    const double mid = 0.5 * (cell_x_min(c) + cell_x_max(c));
    const double dt = cell_t_max(c) - cell_t_min(c);
    if (mid > 0.4 && mid < 0.6)
      CHECK(dt == doctest::Approx(0.025));
    else
      CHECK(dt == doctest::Approx(0.05));
  }
  // vertical faces at x=0.4 come in matched pairs: every interior face there
  // couples one coarse cell with one fine cell
  int hanging = 0;
  for (const Face& f : g.faces) {
    if (f.kind != FaceKind::Interior || f.a[1] != f.b[1]) continue;
    if (f.a[1] == doctest::Approx(0.4).epsilon(1e-14)) {
      CHECK(f.measure == doctest::Approx(0.025));
      ++hanging;
    }
  }
  CHECK(hanging == 20);  // 10 coarse slabs x 2 sub-faces
  // quasi-ratio degrades by at most the refinement factor
  auto m1 = grid_metrics(build_local_timestep_grid(0.1, 0.5, {0.4, 0.6, 1}, 0.5, 0.0, 1.0));
  auto m2 = grid_metrics(g);
  CHECK(m2.quasi_ratio >= m1.quasi_ratio / 2.0 - 1e-13);
}

TEST_CASE("local timestep grid: misaligned region rejected") {
  CHECK_THROWS_AS(build_local_timestep_grid(0.1, 0.5, {0.43, 0.6, 2}, 0.5, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("moving vertex grid: zero velocity reduces to uniform") {
  auto u = build_uniform_grid(0.1, 0.25, 0.25, 0.0, 1.0);
  auto mv = build_moving_vertex_grid(0.1, 0.25, 0.25, 0.0, 1.0, [](double, double) { return 0.0; });
  REQUIRE(u.num_cells() == mv.num_cells());
  for (int i = 0; i < u.num_cells(); ++i)
    for (std::size_t k = 0; k < 4; ++k)
      CHECK((u.cells[i].vertices[k] - mv.cells[i].vertices[k]).norm() == 0.0);
}

TEST_CASE("moving vertex grid: constant velocity slants interior faces uniformly") {
  const double c = 0.8;
  auto g = build_moving_vertex_grid(0.1, 0.25, 0.1, 0.0, 1.0,
                                    [c](double, double) { return c; });
  validate_grid(g);
  const Vec2 want = Vec2(-c, 1.0) / std::sqrt(1.0 + c * c);
  int slanted = 0;
  for (const Face& f : g.faces) {
    if (f.kind != FaceKind::Interior) continue;
    if (f.a[0] != f.b[0] && f.a[1] != f.b[1]) {
      CHECK((f.normal - want).norm() < 1e-13);
      ++slanted;
    }
  }
  CHECK(slanted > 0);
}

TEST_CASE("moving vertex grid: sinusoidal velocity keeps positive areas and exact tiling") {
  auto g = build_moving_vertex_grid(0.05, 0.25, 0.4, 0.0, 1.0, [](double, double x) {
    return std::sin(2.0 * M_PI * x);
  });
  validate_grid(g);
  for (const Cell& c : g.cells) CHECK(c.volume > 0.0);
  CHECK(std::abs(total_volume(g) - slab_area(g)) <= 1e-10 * slab_area(g));
}

TEST_CASE("moving vertex grid: inversion reported with layer") {
  CHECK_THROWS_AS(build_moving_vertex_grid(0.1, 1.0, 1.0, 0.0, 1.0,
                                           [](double, double x) { return 16.0 * (0.5 - x); }),
                  GridConstructionError);
}

TEST_CASE("perturbed triangulated grid: valid and tiling") {
  auto g = build_perturbed_triangulated_grid(0.1, 1.0, 0.0, 1.0, 7u);
  validate_grid(g);
  CHECK(std::abs(total_volume(g) - slab_area(g)) <= 1e-10 * slab_area(g));
  // deterministic in the seed
  auto g2 = build_perturbed_triangulated_grid(0.1, 1.0, 0.0, 1.0, 7u);
  REQUIRE(g.num_cells() == g2.num_cells());
  for (int i = 0; i < g.num_cells(); ++i)
    CHECK((g.cells[i].vertices[0] - g2.cells[i].vertices[0]).norm() == 0.0);
}

TEST_CASE("remap layer: identity partition reproduces ordinary time faces") {
  auto g = build_uniform_grid(0.5, 0.5, 0.5, 0.0, 1.0);
  auto r = insert_remap_layer(g, 0.25, {0.0, 0.5, 1.0});
  validate_grid(r);
  CHECK(r.remap_times.size() == 1);
  int remap_faces = 0;
  for (const Face& f : r.faces)
    if (f.kind == FaceKind::Interior && f.a[0] == r.remap_times[0] && f.b[0] == r.remap_times[0]) {
      CHECK(f.measure == doctest::Approx(0.5));
      ++remap_faces;
    }
  CHECK(remap_faces == 2);  // one per cell, as without the remap
}

TEST_CASE("remap layer: overlap measures from interval intersection") {
  auto g = build_uniform_grid(0.5, 0.5, 0.5, 0.0, 1.0);
  auto r = insert_remap_layer(g, 0.25, {0.0, 0.3, 1.0});
  validate_grid(r);
  std::multiset<double> measures;
  double sum = 0.0;
  for (const Face& f : r.faces)
    if (f.kind == FaceKind::Interior && f.a[0] == 0.25 && f.b[0] == 0.25) {
      measures.insert(f.measure);
      sum += f.measure;
    }
  REQUIRE(measures.size() == 3);
  auto it = measures.begin();
  CHECK(*it++ == doctest::Approx(0.2));
  CHECK(*it++ == doctest::Approx(0.3));
  CHECK(*it++ == doctest::Approx(0.5));
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("remap layer: non-boundary time rejected") {
  auto g = build_uniform_grid(0.5, 0.5, 0.5, 0.0, 1.0);
  CHECK_THROWS_AS(insert_remap_layer(g, 0.1, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("interior faces are shared by exactly two cells on every family") {
  std::vector<SpaceTimeGrid> grids;
  grids.push_back(build_uniform_grid(0.125, 0.5, 0.25, 0.0, 1.0));
  grids.push_back(build_staggered_grid(0.25, 0.05, 0.2, 0.0, 1.0));
  grids.push_back(build_local_timestep_grid(0.125, 0.5, {0.25, 0.5, 3}, 0.25, 0.0, 1.0));
  grids.push_back(build_moving_vertex_grid(0.125, 0.25, 0.25, 0.0, 1.0,
                                           [](double, double x) { return std::sin(2 * M_PI * x); }));
  grids.push_back(build_perturbed_triangulated_grid(0.125, 0.5, 0.0, 1.0, 3u));
  for (const auto& g : grids) {
    validate_grid(g);
    for (const Face& f : g.faces) {
      if (f.kind == FaceKind::Interior) {
        CHECK(f.left >= 0);
        CHECK(f.right >= 0);
        CHECK(f.left != f.right);
      }
    }
    // every cell's boundary is covered (validate_grid checks measures); also check
    // both orientations agree: reversed enumeration is the negated normal by the
    // stored endpoint convention.
    for (const Face& f : g.faces) {
      const Vec2 d = f.b - f.a;
      CHECK((Vec2(d[1], -d[0]) / d.norm() - f.normal).norm() <= 1e-14);
    }
  }
}
