#include "stlw/geometry.hpp"

#include <doctest.h>

#include <cmath>

using namespace stlw;

TEST_CASE("shoelace area and centroid of a rectangle") {
  std::vector<Vec2> rect = {Vec2(0, 0), Vec2(2, 0), Vec2(2, 1), Vec2(0, 1)};
  CHECK(polygon_area(rect) == doctest::Approx(2.0));
  const Vec2 c = polygon_centroid(rect);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(0.5));
  CHECK(polygon_diameter(rect) == doctest::Approx(std::sqrt(5.0)));
  CHECK(polygon_perimeter(rect) == doctest::Approx(6.0));
}

TEST_CASE("triangle centroid is the vertex average") {
  std::vector<Vec2> tri = {Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)};
  const Vec2 c = polygon_centroid(tri);
  CHECK(c[0] == doctest::Approx(1.0 / 3.0));
  CHECK(c[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("convex clip against half-planes") {
  std::vector<Vec2> sq = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)};
  auto half = clip_convex(sq, Vec2(1, 0), 0.5);  // t <= 0.5
  CHECK(polygon_area(half) == doctest::Approx(0.5));
  auto empty = clip_convex(sq, Vec2(1, 0), -0.1);
  CHECK(empty.empty());
  auto all = clip_convex(sq, Vec2(1, 0), 2.0);
  CHECK(polygon_area(all) == doctest::Approx(1.0));
}

TEST_CASE("segment-polygon distance") {
  std::vector<Vec2> sq = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)};
  CHECK(segment_polygon_distance(Vec2(2, 0), Vec2(2, 1), sq) == doctest::Approx(1.0));
  CHECK(segment_polygon_distance(Vec2(1, 0), Vec2(1, 1), sq) == doctest::Approx(0.0));
  CHECK(segment_polygon_distance(Vec2(0.5, 0.5), Vec2(0.6, 0.5), sq) == doctest::Approx(0.0));
  CHECK(segment_polygon_distance(Vec2(-1, -1), Vec2(-1, 2), sq) == doctest::Approx(1.0));
}

TEST_CASE("polygon-rectangle intersection includes boundary contact") {
  std::vector<Vec2> tri = {Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)};
  CHECK(polygon_intersects_rect(tri, 0.5, 2.0, 0.0, 1.0));
  CHECK(polygon_intersects_rect(tri, 1.0, 2.0, 0.0, 1.0));  // single-point touch
  CHECK(!polygon_intersects_rect(tri, 1.5, 2.0, 1.5, 2.0));
}
