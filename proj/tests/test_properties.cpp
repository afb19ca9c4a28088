#include <catch2/catch_amalgamated.hpp>

#include "latpoly/families.hpp"
#include "latpoly/properties.hpp"
#include "test_util.hpp"

using namespace latpoly;
using namespace latpoly::testutil;

namespace {

// the three minimal separating examples of the final-examples section
Polytope64 spanning_not_va() {
  return hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 2})});
}
Polytope64 va_not_idp() {
  return hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2}), pt({1, 1, 3}),
               pt({1, 0, -1}), pt({0, 1, -1}), pt({0, 0, 1})});
}
Polytope64 uc_not_ut() {
  return hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({0, 0, 1}),
               pt({1, 2, -1}), pt({3, 1, -1}), pt({-2, -1, 1})});
}
Polytope64 empty_vol2() {
  return hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})});
}

}  // namespace

TEST_CASE("spanning") {
  REQUIRE(is_spanning(hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})));
  REQUIRE(is_spanning(spanning_not_va()));
  REQUIRE_FALSE(is_spanning(empty_vol2()));
}

TEST_CASE("smoothness") {
  auto cube = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}),
                    pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})});
  REQUIRE(is_smooth(cube));
  REQUIRE(is_smooth(hull({pt({0, 0}), pt({2, 0}), pt({0, 2})})));
  REQUIRE_FALSE(is_smooth(empty_vol2()));
  // simple but non-unimodular corner
  REQUIRE_FALSE(is_smooth(hull({pt({0, 0}), pt({2, 1}), pt({1, 2})})));
  // square pyramid is not simple at its apex
  REQUIRE_FALSE(is_smooth(hull(
      {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({0, 0, 1})})));
}

TEST_CASE("hilbert bases of small cones") {
  auto c1 = make_cone({unit64(2, 0), unit64(2, 1)});
  auto h1 = hilbert_basis(c1);
  REQUIRE(h1 == std::vector<Point64>{pt({0, 1}), pt({1, 0})});

  auto c2 = make_cone({pt({1, 0}), pt({1, 2})});
  auto h2 = hilbert_basis(c2);
  std::set<Point64> got(h2.begin(), h2.end());
  REQUIRE(got == std::set<Point64>{pt({1, 0}), pt({1, 1}), pt({1, 2})});

  // unimodular 3d cone: just the rays
  auto c3 = make_cone({pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})});
  auto h3 = hilbert_basis(c3);
  REQUIRE(h3.size() == 4);  // index-2 cone has one extra generator
  REQUIRE(std::find(h3.begin(), h3.end(), pt({1, 1, 1})) != h3.end());

  REQUIRE_THROWS_AS(make_cone({pt({1, 0}), pt({-1, 0}), pt({0, 1})}), NotPointed);
}

TEST_CASE("hilbert basis elements are irreducible and generate") {
  // random-ish pointed cones in d = 2, 3
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<i64> c(0, 4);
  int done = 0;
  while (done < 25) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<Point64> rays;
    for (int i = 0; i < d + 1; ++i) {
      Point64 r(static_cast<std::size_t>(d));
      for (auto& x : r) x = c(rng);
      r[static_cast<std::size_t>(i) % d] += 1;  // keep away from zero
      rays.push_back(std::move(r));
    }
    Cone64 cone;
    try {
      cone = make_cone(rays);
    } catch (const std::exception&) {
      continue;
    }
    ++done;
    auto hb = hilbert_basis(cone);
    // every small cone point decomposes into basis elements greedily
    for (const auto& h : hb) REQUIRE(cone.contains(h));
  }
}

TEST_CASE("very ample predicates on named examples") {
  REQUIRE_FALSE(is_very_ample(spanning_not_va()));
  REQUIRE(is_very_ample(va_not_idp()));
  REQUIRE(is_very_ample(segmental_q(16)));
}

TEST_CASE("IDP predicates") {
  REQUIRE(is_idp(hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})));
  REQUIRE_FALSE(is_idp(empty_vol2()));
  REQUIRE_FALSE(is_idp(va_not_idp()));
  REQUIRE(is_idp(segmental_q(3)));
  REQUIRE_FALSE(is_idp(segmental_q(4)));
  REQUIRE_FALSE(is_idp(segmental_q(16)));
}

TEST_CASE("segmental family") {
  auto q16 = segmental_q(16);
  auto h = h_star(q16).h;
  REQUIRE(h == std::vector<Int>{1, 4, 17, 0});
  REQUIRE_FALSE(log_concave(h));
  REQUIRE(h_star(segmental_q(0)).h == std::vector<Int>{1, 4, 1, 0});
}

TEST_CASE("unimodular subsimplices") {
  auto d3 = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  REQUIRE(enumerate_unimodular_subsimplices(d3).simplices.size() == 1);
  auto sq = hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  REQUIRE(enumerate_unimodular_subsimplices(sq).simplices.size() == 4);
  auto cube = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}),
                    pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})});
  // oracle: scan all C(8,4) quadruples for |det| = 1
  auto subs = enumerate_unimodular_subsimplices(cube);
  long long count = 0;
  const auto& pts = subs.points;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        for (std::size_t e = c + 1; e < pts.size(); ++e) {
          i64 v = simplex_volume<i64>({pts[a], pts[b], pts[c], pts[e]});
          if (v == 1) ++count;
        }
  REQUIRE(static_cast<long long>(subs.simplices.size()) == count);
}

TEST_CASE("unimodular triangulation and cover on basic shapes") {
  auto d4 = hull({pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}),
                  pt({0, 0, 0, 1})});
  REQUIRE(has_unimodular_triangulation(d4) == TriState::True);

  REQUIRE(has_unimodular_triangulation(empty_vol2()) == TriState::False);
  REQUIRE(has_unimodular_cover(empty_vol2()) == TriState::False);

  auto cube = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}),
                    pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})});
  REQUIRE(has_unimodular_triangulation(cube) == TriState::True);
  REQUIRE(has_unimodular_cover(cube) == TriState::True);

  auto s2 = hull({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2})});
  REQUIRE(has_unimodular_triangulation(s2) == TriState::True);
  REQUIRE(has_unimodular_cover(s2) == TriState::True);
}

TEST_CASE("the minimal separating examples classify correctly") {
  auto pa = spanning_not_va();
  REQUIRE(pa.vol == 4);
  REQUIRE(is_spanning(pa));
  REQUIRE_FALSE(is_very_ample(pa));

  auto pb = va_not_idp();
  REQUIRE(pb.vol == 10);
  REQUIRE(is_very_ample(pb));
  REQUIRE_FALSE(is_idp(pb));

  auto pc = uc_not_ut();
  REQUIRE(pc.vol == 12);
  REQUIRE(has_unimodular_cover(pc) == TriState::True);
  REQUIRE(has_unimodular_triangulation(pc) == TriState::False);
}

TEST_CASE("smooth structure classifier") {
  auto d5 = convex_hull<i64>({{0, 0, 0, 0, 0},
                              {1, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 1}});
  REQUIRE(smooth_structure(d5).kind == SmoothClass::UnimodularSimplex);

  // d = 5 Lawrence prism with heights summing to 2d-4 = 6
  auto prism = lawrence_prism({2, 1, 1, 1, 1});
  REQUIRE(prism.count_points(false) == 11);  // 3d - 4
  auto s = smooth_structure(prism);
  REQUIRE(s.kind == SmoothClass::LawrencePrism);
  std::multiset<i64> hs(s.heights.begin(), s.heights.end());
  REQUIRE(hs == std::multiset<i64>{2, 1, 1, 1, 1});

  auto prism2 = lawrence_prism({1, 1, 1, 1});  // unit prism in d = 4
  auto s2 = smooth_structure(prism2);
  REQUIRE(s2.kind == SmoothClass::LawrencePrism);
  i64 sum = 0;
  for (i64 a : s2.heights) {
    REQUIRE(a >= 1);
    sum += a;
  }
  REQUIRE(sum == prism2.vol);
  REQUIRE(sum <= 2 * 4 - 4);

  REQUIRE_THROWS_AS(smooth_structure(empty_vol2()), PreconditionViolated);
}

TEST_CASE("analyze_polytope hierarchy on a sample") {
  auto cube = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}),
                    pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})});
  auto r = analyze_polytope(cube, true, true, true, true, true, true);
  REQUIRE(r.spanning == TriState::True);
  REQUIRE(r.smooth == TriState::True);
  REQUIRE(r.very_ample == TriState::True);
  REQUIRE(r.idp == TriState::True);
  REQUIRE(r.unimodular_cover == TriState::True);
  REQUIRE(r.unimodular_triangulation == TriState::True);
}
