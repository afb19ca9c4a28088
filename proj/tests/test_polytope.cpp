#include <catch2/catch_amalgamated.hpp>

#include "latpoly/polytope.hpp"

#include <random>

using namespace latpoly;

namespace {

Point64 pt(std::initializer_list<i64> v) { return Point64(v); }

Polytope64 hull64(std::initializer_list<Point64> v) { return convex_hull(std::vector<Point64>(v)); }

Polytope64 unit_cube3() {
  std::vector<Point64> pts;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) pts.push_back(pt({x, y, z}));
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("simplex volume") {
  // unit simplex: volume 1
  REQUIRE(simplex_volume<i64>({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) == 1);
  // conv(0, 2e1, 3e2, 12e3): determinant 2*3*12
  REQUIRE(simplex_volume<i64>({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 12})}) == 72);
  // coplanar points give 0
  REQUIRE(simplex_volume<i64>({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}) == 0);
}

TEST_CASE("hull of the corank-one example has 5 vertices and volume 3") {
  std::vector<Point64> a = {pt({0, 0, 0}), pt({0, 1, 1}), pt({1, 0, 1}), pt({1, 1, 0}),
                            pt({1, 1, 1})};
  auto p = convex_hull(a);
  REQUIRE(p.num_vertices() == 5);
  REQUIRE(p.vol == 3);
}

TEST_CASE("hull absorbs interior points") {
  auto p = hull64({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2}), pt({1, 1})});
  REQUIRE(p.num_vertices() == 4);
  REQUIRE(p.vol == 8);
}

TEST_CASE("hull of d+1 independent points is a simplex with d+1 facets") {
  auto p = hull64({pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}),
                        pt({0, 0, 0, 1})});
  REQUIRE(p.num_vertices() == 5);
  REQUIRE(p.facets.size() == 5);
  REQUIRE(p.vol == 1);
}

TEST_CASE("hull rejects degenerate input") {
  REQUIRE_THROWS_AS(convex_hull<i64>({pt({0, 0}), pt({1, 1}), pt({2, 2})}), NotFullDimensional);
}

TEST_CASE("facet normals are primitive and inward with tight incidences") {
  auto p = unit_cube3();
  REQUIRE(p.num_vertices() == 8);
  REQUIRE(p.facets.size() == 6);
  REQUIRE(p.vol == 6);
  for (const auto& f : p.facets) {
    REQUIRE(content(f.normal) == 1);
    int on = 0;
    for (const auto& v : p.verts) {
      REQUIRE(dot(f.normal, v) <= f.offset);
      if (dot(f.normal, v) == f.offset) ++on;
    }
    REQUIRE(on == static_cast<int>(f.incident.size()));
    REQUIRE(on >= 3);
  }
}

TEST_CASE("lattice point counts") {
  auto cube = unit_cube3();
  REQUIRE(cube.count_points(false) == 8);
  REQUIRE(cube.count_points(true) == 0);

  // 2 * unit simplex in dim 3 has binom(5,3) = 10 points
  auto simplex2 =
      make_simplex<i64>({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2})});
  REQUIRE(simplex2.count_points(false) == 10);

  // S^3_1 has exactly one interior point
  auto zpw = make_simplex<i64>({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 12})});
  REQUIRE(zpw.count_points(true) == 1);
  auto interior = lattice_points(zpw, true);
  REQUIRE(interior.size() == 1);
  REQUIRE(interior[0] == pt({1, 1, 1}));
}

TEST_CASE("lattice points come out in lexicographic order") {
  auto sq = hull64({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2})});
  auto pts = lattice_points(sq, false);
  REQUIRE(pts.size() == 9);
  REQUIRE(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("triangulation volumes sum to the hull volume") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<i64> coord(-4, 4);
  for (int it = 0; it < 60; ++it) {
    int d = 2 + static_cast<int>(rng() % 4);
    int n = d + 2 + static_cast<int>(rng() % 5);
    std::vector<Point64> pts;
    for (int i = 0; i < n; ++i) {
      Point64 v(static_cast<std::size_t>(d));
      for (auto& c : v) c = coord(rng);
      pts.push_back(std::move(v));
    }
    Polytope64 p;
    try {
      p = convex_hull(pts);
    } catch (const NotFullDimensional&) {
      continue;
    }
    i64 total = 0;
    for (const auto& cell : p.triangulation()) {
      std::vector<Point64> cp;
      for (int id : cell) cp.push_back(p.verts[static_cast<std::size_t>(id)]);
      total += simplex_volume(cp);
    }
    REQUIRE(total == p.vol);
    // Blichfeldt: |P cap Z^d| <= d + Vol(P)
    REQUIRE(p.count_points(false) <= d + p.vol);
  }
}

TEST_CASE("dilation scales volume and offsets") {
  auto s = make_simplex<i64>({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  auto s3 = dilate(s, i64(3));
  REQUIRE(s3.vol == 9);
  REQUIRE(s3.count_points(false) == 10);
}

TEST_CASE("transform by a unimodular map preserves volume and counts") {
  auto zpw = make_simplex<i64>({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 12})});
  Matrix64 u(3, 3);
  u(0, 0) = 1; u(0, 1) = 2; u(0, 2) = 0;
  u(1, 0) = 0; u(1, 1) = 1; u(1, 2) = 0;
  u(2, 0) = 3; u(2, 1) = 0; u(2, 2) = 1;
  auto img = transform(zpw, u, pt({5, -7, 11}));
  REQUIRE(img.vol == zpw.vol);
  REQUIRE(img.count_points(false) == zpw.count_points(false));
  REQUIRE(img.count_points(true) == zpw.count_points(true));
  for (const auto& f : img.facets) {
    for (const auto& v : img.verts) REQUIRE(dot(f.normal, v) <= f.offset);
  }
}
