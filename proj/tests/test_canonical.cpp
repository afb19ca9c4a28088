#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace latpoly;
using namespace latpoly::testutil;

TEST_CASE("key is invariant under vertex order and translation") {
  auto a = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  auto b = hull({pt({7, 7, 7}), pt({7, 8, 7}), pt({8, 7, 7}), pt({7, 7, 8})});
  REQUIRE(canonical_key(a) == canonical_key(b));
  REQUIRE(are_equivalent(a, b));
}

TEST_CASE("translated triangle matches") {
  auto a = hull({pt({0, 0}), pt({1, 0}), pt({0, 2})});
  auto b = hull({pt({5, 7}), pt({6, 7}), pt({5, 9})});
  REQUIRE(canonical_key(a) == canonical_key(b));
}

TEST_CASE("key separates the two volume-2 simplices in dim 3") {
  auto a = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 2})});
  auto b = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})});
  REQUIRE_FALSE(canonical_key(a) == canonical_key(b));
  REQUIRE_FALSE(are_equivalent(a, b));
  REQUIRE_FALSE(equivalent_bruteforce(a, b));
}

TEST_CASE("oracle decides conv(0,e1,e2,(1,1,2)) vs conv(0,e1,e2,(0,1,2))") {
  auto a = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})});
  auto b = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 1, 2})});
  bool oracle = equivalent_bruteforce(a, b);
  REQUIRE(are_equivalent(a, b) == oracle);
  // they have 4 vs 5 lattice points, so they cannot be equivalent
  REQUIRE_FALSE(oracle);
}

TEST_CASE("are_equivalent agrees with the brute-force oracle on small cases") {
  std::vector<Polytope64> zoo = {
      hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}),
      hull({pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}),
      hull({pt({0, 0}), pt({2, 0}), pt({0, 2})}),
      hull({pt({0, 0}), pt({2, 1}), pt({1, 2})}),
      hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 2})}),
      hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})}),
      hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})}),
      hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, -1})}),
  };
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < zoo.size(); ++i)
    for (std::size_t j = 0; j < zoo.size(); ++j) {
      if (zoo[i].dim != zoo[j].dim) continue;
      auto m = random_unimodular_map(zoo[j].dim, rng);
      auto qj = apply_map(zoo[j], m);
      REQUIRE(are_equivalent(zoo[i], qj) == equivalent_bruteforce(zoo[i], qj));
    }
}

TEST_CASE("key invariance under random unimodular maps") {
  std::mt19937_64 rng(555);
  std::vector<Polytope64> samples = {
      hull({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 12})}),
      hull({pt({0, 0}), pt({3, 1}), pt({1, 3}), pt({0, 1})}),
      hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}),
            pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})}),
      hull({pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}),
            pt({1, 1, 1, 2})}),
  };
  auto facet_point_multiset = [](const Polytope64& p) {
    std::multiset<long long> m;
    for (const auto& f : p.facets) {
      long long on = 0;
      for (const auto& x : lattice_points(p, false))
        if (dot(f.normal, x) == f.offset) ++on;
      m.insert(on);
    }
    return m;
  };
  for (const auto& p : samples) {
    auto key = canonical_key(p);
    auto fm = facet_point_multiset(p);
    for (int it = 0; it < 100; ++it) {
      auto q = apply_map(p, random_unimodular_map(p.dim, rng));
      REQUIRE(canonical_key(q) == key);
      // keys agree, so every key invariant must agree too
      REQUIRE(q.vol == p.vol);
      REQUIRE(q.count_points(false) == p.count_points(false));
      REQUIRE(q.count_points(true) == p.count_points(true));
      REQUIRE(facet_point_multiset(q) == fm);
    }
  }
}

TEST_CASE("canonical vertices are a genuine representative") {
  std::mt19937_64 rng(77);
  auto p = hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 3}), pt({-1, 2, 1})});
  auto verts = canonical_vertices(p);
  REQUIRE(is_zero(verts[0]));
  auto q = convex_hull(verts);
  REQUIRE(q.num_vertices() == p.num_vertices());
  REQUIRE(canonical_key(q) == canonical_key(p));
  // and under a random relabeling of p, the representative is bit-identical
  auto r = apply_map(p, random_unimodular_map(3, rng));
  REQUIRE(canonical_vertices(r) == verts);
}
