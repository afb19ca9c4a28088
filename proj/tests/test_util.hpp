#pragma once

// Shared helpers for the test suites: small constructors, a brute-force
// unimodular-equivalence oracle, and random unimodular maps.

#include "latpoly/canonical.hpp"

#include <random>

namespace latpoly::testutil {

inline Point64 pt(std::initializer_list<i64> v) { return Point64(v); }

inline Polytope64 hull(std::initializer_list<Point64> v) {
  return convex_hull(std::vector<Point64>(v));
}

inline UnimodularMap<i64> random_unimodular_map(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<i64> tr(-9, 9);
  while (true) {
    Matrix64 m = Matrix64::identity(d);
    int steps = 2 + d;
    for (int s = 0; s < steps; ++s) {
      int i = static_cast<int>(rng() % static_cast<unsigned>(d));
      int j = static_cast<int>(rng() % static_cast<unsigned>(d));
      if (i == j) {
        if (rng() & 1)
          for (int c = 0; c < d; ++c) m(i, c) = -m(i, c);
        continue;
      }
      i64 k = coeff(rng);
      for (int c = 0; c < d; ++c) m(i, c) += k * m(j, c);
    }
    i64 mx = 0;
    for (i64 v : m.a) mx = std::max(mx, v < 0 ? -v : v);
    if (mx > 60) continue;
    UnimodularMap<i64> u;
    u.linear = std::move(m);
    u.translation.resize(static_cast<std::size_t>(d));
    for (auto& t : u.translation) t = tr(rng);
    return u;
  }
}

// Independent oracle: search all vertex bijections for an affine unimodular
// map realizing one.  Exponential, for tiny inputs only.
inline bool equivalent_bruteforce(const Polytope64& p, const Polytope64& q) {
  if (p.dim != q.dim || p.vol != q.vol || p.num_vertices() != q.num_vertices()) return false;
  const int d = p.dim;
  const int n = p.num_vertices();

  // d linearly independent difference columns of p
  std::vector<int> pick;
  {
    for (int i = 1; i < n && static_cast<int>(pick.size()) < d; ++i) {
      Matrix64 t(static_cast<int>(pick.size()) + 1, d);
      for (std::size_t r = 0; r < pick.size(); ++r)
        for (int c = 0; c < d; ++c)
          t(static_cast<int>(r), c) = p.verts[static_cast<std::size_t>(pick[r])][static_cast<std::size_t>(c)] -
                                      p.verts[0][static_cast<std::size_t>(c)];
      for (int c = 0; c < d; ++c)
        t(static_cast<int>(pick.size()), c) =
            p.verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] - p.verts[0][static_cast<std::size_t>(c)];
      if (rank_of(t) == static_cast<int>(pick.size()) + 1) pick.push_back(i);
    }
  }
  Matrix64 m(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      m(i, j) = p.verts[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])][static_cast<std::size_t>(i)] -
                p.verts[0][static_cast<std::size_t>(i)];
  Matrix64 madj(d, d);
  {
    Matrix64 minor(d - 1, d - 1);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int rr = 0;
        for (int r = 0; r < d; ++r) {
          if (r == j) continue;
          int cc = 0;
          for (int c = 0; c < d; ++c) {
            if (c == i) continue;
            minor(rr, cc++) = m(r, c);
          }
          ++rr;
        }
        i64 cof = det_checked(minor);
        madj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
      }
  }
  i64 dm = det_checked(m);

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    // candidate: map p.verts[i] -> q.verts[perm[i]]
    Matrix64 rhs(d, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        rhs(i, j) =
            q.verts[static_cast<std::size_t>(perm[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])])]
                   [static_cast<std::size_t>(i)] -
            q.verts[static_cast<std::size_t>(perm[0])][static_cast<std::size_t>(i)];
    // A = rhs * adj(m) / det(m)
    Matrix64 num = mat_mul(rhs, madj);
    bool ok = true;
    for (auto& v : num.a) {
      if (v % dm != 0) {
        ok = false;
        break;
      }
      v /= dm;
    }
    if (!ok) continue;
    i64 da = det_checked(num);
    if (da != 1 && da != -1) continue;
    // verify every vertex
    ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int r = 0; r < d && ok; ++r) {
        i64 s = 0;
        for (int c = 0; c < d; ++c)
          s += num(r, c) * (p.verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                            p.verts[0][static_cast<std::size_t>(c)]);
        i64 want = q.verts[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(r)] -
                   q.verts[static_cast<std::size_t>(perm[0])][static_cast<std::size_t>(r)];
        if (s != want) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace latpoly::testutil
