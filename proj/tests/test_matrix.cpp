#include <catch2/catch_amalgamated.hpp>

#include "latpoly/matrix.hpp"

#include <random>

using namespace latpoly;

static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

TEST_CASE("hnf of the identity is the identity") {
  auto r = hnf(IntMatrix::identity(4));
  REQUIRE(r.h == IntMatrix::identity(4));
  REQUIRE(r.u == IntMatrix::identity(4));
}

TEST_CASE("hnf of [[1,2],[3,4]] has diagonal product |det| = 2") {
  IntMatrix m = from_rows({{1, 2}, {3, 4}});
  auto r = hnf(m);
  REQUIRE(r.h(1, 0) == 0);
  REQUIRE(r.h(0, 0) * r.h(1, 1) == 2);
  REQUIRE(r.h(0, 0) > 0);
  REQUIRE(r.h(1, 1) > 0);
  REQUIRE(r.h(0, 1) >= 0);
  REQUIRE(r.h(0, 1) < r.h(1, 1));
  REQUIRE(mat_mul(r.u, m) == r.h);
  Int du = det_bareiss(r.u);
  REQUIRE((du == 1 || du == -1));
}

TEST_CASE("hnf of an already triangular vertex matrix keeps the diagonal") {
  // vertices 2e1, 3e2, 6e3 relative to the origin
  IntMatrix m = from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 6}});
  auto r = hnf(m);
  REQUIRE(r.h == m);
  REQUIRE(r.h(0, 0) * r.h(1, 1) * r.h(2, 2) == 36);
}

TEST_CASE("hnf rejects singular input") {
  REQUIRE_THROWS_AS(hnf(from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("hnf normalization and unimodularity on random matrices") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int d = 1; d <= 6; ++d) {
    int cases = 0;
    while (cases < 1000) {
      IntMatrix m(d, d);
      for (auto& v : m.a) v = coeff(rng);
      if (det_bareiss(m) == 0) continue;
      ++cases;
      auto r = hnf(m);
      REQUIRE(mat_mul(r.u, m) == r.h);
      Int du = det_bareiss(r.u);
      REQUIRE((du == 1 || du == -1));
      for (int i = 0; i < d; ++i) {
        REQUIRE(r.h(i, i) > 0);
        for (int j = 0; j < i; ++j) REQUIRE(r.h(i, j) == 0);
        for (int j = i + 1; j < d; ++j) {
          REQUIRE(r.h(i, j) >= 0);
          REQUIRE(r.h(i, j) < r.h(j, j));
        }
      }
    }
  }
}

TEST_CASE("smith invariant factors") {
  REQUIRE(snf_invariant_factors(IntMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
  REQUIRE(snf_invariant_factors(from_rows({{2, 0}, {0, 4}})) == std::vector<Int>{2, 4});
  // columns e1, e2, (1,1,2)
  REQUIRE(snf_invariant_factors(from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}})) ==
          std::vector<Int>{1, 1, 2});
  // divisibility chain on a random-ish rectangular matrix
  IntMatrix m = from_rows({{6, 4, 2}, {2, 8, 10}});
  auto d = snf_invariant_factors(m);
  REQUIRE(d.size() == 2);
  REQUIRE(d[0] > 0);
  REQUIRE(d[1] % d[0] == 0);
  // product of nonzero factors = gcd of maximal minors (here |det of 2x2s|)
}

TEST_CASE("smith factors satisfy divisibility on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int it = 0; it < 200; ++it) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(r, c);
    for (auto& v : m.a) v = coeff(rng);
    auto d = snf_invariant_factors(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] == 0) continue;
      REQUIRE(d[i] != 0);
      REQUIRE(d[i + 1] % d[i] == 0);
    }
  }
}

TEST_CASE("det fast path agrees with the arbitrary-precision path") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    Matrix64 m(n, n);
    for (auto& v : m.a) v = coeff(rng);
    REQUIRE(det_exact(m) == det_bareiss(m.cast<Int>()));
  }
}
