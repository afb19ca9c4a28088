#pragma once

// The predicate stack: spanning, smooth, very ample, IDP, unimodular cover
// and unimodular triangulation, plus the structure classifier for smooth
// polytopes with few lattice points.
//
// The UC/UT decisions are exact searches over the unimodular subsimplices
// of P with a node budget; when the budget runs out the result is
// NotComputed (mirroring the blank cells of the published tables).

#include "latpoly/cones.hpp"
#include "latpoly/ehrhart.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace latpoly {

enum class TriState { False = 0, True = 1, NotComputed = 2 };

struct PropertyRecord {
  TriState spanning = TriState::NotComputed;
  TriState very_ample = TriState::NotComputed;
  TriState idp = TriState::NotComputed;
  TriState unimodular_cover = TriState::NotComputed;
  TriState unimodular_triangulation = TriState::NotComputed;
  TriState smooth = TriState::NotComputed;
};

// ------------------------------------------------------------- spanning --

// P is spanning iff the differences of its lattice points generate Z^d,
// i.e. the Smith invariant factors of the difference matrix are all 1.
inline bool is_spanning(const Polytope64& p) {
  const auto& pts = p.lattice_points_cached();
  IntMatrix m(p.dim, static_cast<int>(pts.size()) - 1);
  for (std::size_t j = 1; j < pts.size(); ++j)
    for (int i = 0; i < p.dim; ++i)
      m(i, static_cast<int>(j) - 1) = pts[j][static_cast<std::size_t>(i)] - pts[0][static_cast<std::size_t>(i)];
  auto f = snf_invariant_factors(m);
  if (static_cast<int>(f.size()) < p.dim) return false;
  for (int i = 0; i < p.dim; ++i)
    if (f[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

// ------------------------------------------------------------ smoothness --

// Adjacency from the face lattice: v and w span an edge iff no further
// vertex lies on every facet containing both.
inline std::vector<std::vector<int>> vertex_neighbors(const Polytope64& p) {
  const int n = p.num_vertices();
  std::vector<std::vector<int>> facets_of(static_cast<std::size_t>(n));
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    for (int v : p.facets[f].incident)
      facets_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      std::vector<int> common;
      std::set_intersection(facets_of[static_cast<std::size_t>(v)].begin(),
                            facets_of[static_cast<std::size_t>(v)].end(),
                            facets_of[static_cast<std::size_t>(w)].begin(),
                            facets_of[static_cast<std::size_t>(w)].end(),
                            std::back_inserter(common));
      bool edge = true;
      for (int u = 0; u < n && edge; ++u) {
        if (u == v || u == w) continue;
        bool on_all = true;
        for (int f : common)
          if (dot(p.facets[static_cast<std::size_t>(f)].normal, p.verts[static_cast<std::size_t>(u)]) !=
              p.facets[static_cast<std::size_t>(f)].offset) {
            on_all = false;
            break;
          }
        if (on_all) edge = false;
      }
      if (edge) {
        nbr[static_cast<std::size_t>(v)].push_back(w);
        nbr[static_cast<std::size_t>(w)].push_back(v);
      }
    }
  return nbr;
}

// Simple, and the primitive edge directions at every vertex form a lattice
// basis.
inline bool is_smooth(const Polytope64& p) {
  const int d = p.dim;
  auto nbr = vertex_neighbors(p);
  for (int v = 0; v < p.num_vertices(); ++v) {
    if (static_cast<int>(nbr[static_cast<std::size_t>(v)].size()) != d) return false;
    Matrix64 m(d, d);
    for (int e = 0; e < d; ++e) {
      Point64 dir = primitive(
          sub(p.verts[static_cast<std::size_t>(nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)])],
              p.verts[static_cast<std::size_t>(v)]));
      for (int j = 0; j < d; ++j) m(e, j) = dir[static_cast<std::size_t>(j)];
    }
    i64 det = det_checked(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

// ----------------------------------------------------------- very ample --

inline Cone64 tangent_cone(const Polytope64& p, int v,
                           const std::vector<std::vector<int>>& nbr) {
  std::vector<Point64> rays;
  rays.reserve(nbr[static_cast<std::size_t>(v)].size());
  for (int w : nbr[static_cast<std::size_t>(v)])
    rays.push_back(primitive(sub(p.verts[static_cast<std::size_t>(w)], p.verts[static_cast<std::size_t>(v)])));
  Cone64 c = make_cone(rays);
  return c;
}

inline Cone64 tangent_cone(const Polytope64& p, int v) {
  return tangent_cone(p, v, vertex_neighbors(p));
}

// Every Hilbert basis element of every vertex cone must be reachable
// inside P - v.
inline bool is_very_ample(const Polytope64& p) {
  auto nbr = vertex_neighbors(p);
  for (int v = 0; v < p.num_vertices(); ++v) {
    Cone64 c = tangent_cone(p, v, nbr);
    for (const auto& h : hilbert_basis(c))
      if (!p.contains(add(p.verts[static_cast<std::size_t>(v)], h))) return false;
  }
  return true;
}

// ------------------------------------------------------------------- IDP --

// Checks degrees 2..max(2, d-1) (or an explicit bound): each lattice point
// of kP must split as a point of (k-1)P plus a point of P.
inline bool is_idp(const Polytope64& p, int max_degree = 0) {
  const int d = p.dim;
  int hi = max_degree > 0 ? max_degree : std::max(2, d - 1);
  const auto& l1 = p.lattice_points_cached();
  std::unordered_set<Point64, Point64Hash> prev(l1.begin(), l1.end());
  for (int k = 2; k <= hi; ++k) {
    auto cur = lattice_points(dilate(p, static_cast<i64>(k)), false);
    for (const auto& z : cur) {
      bool ok = false;
      for (const auto& a : l1) {
        if (prev.count(sub(z, a))) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    prev = std::unordered_set<Point64, Point64Hash>(cur.begin(), cur.end());
  }
  return true;
}

// ------------------------------------------- unimodular cover/triangulation --

struct UnimodularSubsimplices {
  std::vector<Point64> points;               // lattice points of P
  std::vector<std::vector<int>> simplices;   // index lists, volume-1 simplices
};

inline UnimodularSubsimplices enumerate_unimodular_subsimplices(const Polytope64& p) {
  UnimodularSubsimplices out;
  out.points = p.lattice_points_cached();
  const int d = p.dim;
  const int n = static_cast<int>(out.points.size());
  std::vector<int> idx(static_cast<std::size_t>(d) + 1);
  Matrix64 m(d, d);
  auto test = [&]() {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m(i, j) = out.points[static_cast<std::size_t>(idx[static_cast<std::size_t>(i) + 1])][static_cast<std::size_t>(j)] -
                  out.points[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(j)];
    i64 det = det_checked(m);
    if (det == 1 || det == -1) out.simplices.push_back(idx);
  };
  if (n < d + 1) return out;
  for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    test();
    int k = d;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - (d + 1 - k)) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace detail {

// One unimodular candidate simplex with its facet hyperplanes.
struct UnimodCell {
  std::vector<Point64> verts;                       // sorted
  std::vector<std::pair<Point64, i64>> facets;      // inward n·x <= b
  // facet keys: sorted vertex lists of each facet, paired with the
  // outward-oriented hyperplane (normal pointing away from the cell)
  struct Side {
    std::vector<Point64> pts;  // sorted facet vertices
    Point64 normal;            // unit-content normal pointing away from the cell
    i64 offset;
  };
  std::vector<Side> sides;
};

inline UnimodCell build_cell(const std::vector<Point64>& pts) {
  UnimodCell c;
  c.verts = pts;
  std::sort(c.verts.begin(), c.verts.end());
  Polytope64 s = make_simplex(c.verts);
  for (const auto& f : s.facets) c.facets.push_back({f.normal, f.offset});
  const int d = s.dim;
  for (int skip = 0; skip <= d; ++skip) {
    UnimodCell::Side side;
    for (int i = 0; i <= d; ++i)
      if (i != skip) side.pts.push_back(c.verts[static_cast<std::size_t>(i)]);
    Point64 n = primitive(hyperplane_normal(side.pts));
    i64 b = dot(n, side.pts[0]);
    if (dot(n, c.verts[static_cast<std::size_t>(skip)]) > b) {
      // orient away from the cell
      for (auto& x : n) x = -x;
      b = -b;
    }
    side.normal = std::move(n);
    side.offset = b;
    c.sides.push_back(std::move(side));
  }
  return c;
}

inline bool point_in_cell(const UnimodCell& c, const Point64& x) {
  for (const auto& [n, b] : c.facets)
    if (dot(n, x) > b) return false;
  return true;
}

// Exact face-to-face test for two lattice simplices: enumerate the
// vertices of the intersection from basic solutions of the combined
// inequality systems, then check that the intersection is a face of both.
inline bool face_to_face(const UnimodCell& a, const UnimodCell& b, int d) {
  std::vector<std::pair<Point64, i64>> rows = a.facets;
  rows.insert(rows.end(), b.facets.begin(), b.facets.end());
  const int m = static_cast<int>(rows.size());
  // vertices of Q = A ∩ B as (numerator vector, positive denominator)
  std::set<std::pair<Point64, i64>> qverts_set;
  std::vector<int> sel(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) sel[static_cast<std::size_t>(i)] = i;
  Matrix64 msys(d, d), mcol(d, d);
  while (true) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) msys(i, j) = rows[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])].first[static_cast<std::size_t>(j)];
    i64 det = det_checked(msys);
    if (det != 0) {
      Point64 num(static_cast<std::size_t>(d));
      for (int col = 0; col < d; ++col) {
        mcol = msys;
        for (int i = 0; i < d; ++i)
          mcol(i, col) = rows[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])].second;
        num[static_cast<std::size_t>(col)] = det_checked(mcol);
      }
      i64 den = det;
      if (den < 0) {
        den = -den;
        for (auto& v : num) v = -v;
      }
      bool feas = true;
      for (int r = 0; r < m && feas; ++r) {
        i64 lhs = 0;
        for (int j = 0; j < d; ++j) lhs += rows[static_cast<std::size_t>(r)].first[static_cast<std::size_t>(j)] * num[static_cast<std::size_t>(j)];
        if (lhs > rows[static_cast<std::size_t>(r)].second * den) feas = false;
      }
      if (feas) {
        i64 g = den;
        for (i64 v : num) g = gcd_of(g, v);
        if (g > 1) {
          den /= g;
          for (auto& v : num) v /= g;
        }
        qverts_set.insert({num, den});
      }
    }
    int k = d - 1;
    while (k >= 0 && sel[static_cast<std::size_t>(k)] == m - (d - k)) --k;
    if (k < 0) break;
    ++sel[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < d; ++j) sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (qverts_set.empty()) return true;  // disjoint
  std::vector<std::pair<Point64, i64>> qverts(qverts_set.begin(), qverts_set.end());

  // smallest face of a cell containing all of Q, as its vertex list
  auto face_of = [&](const UnimodCell& cell) {
    std::vector<const std::pair<Point64, i64>*> active;
    for (const auto& f : cell.facets) {
      bool tight = true;
      for (const auto& [num, den] : qverts)
        if (dot(f.first, num) != f.second * den) {
          tight = false;
          break;
        }
      if (tight) active.push_back(&f);
    }
    std::vector<Point64> face;
    for (const auto& v : cell.verts) {
      bool on = true;
      for (const auto* f : active)
        if (dot(f->first, v) != f->second) {
          on = false;
          break;
        }
      if (on) face.push_back(v);
    }
    return face;
  };
  auto contained_in_q = [&](const std::vector<Point64>& face, const UnimodCell& other) {
    for (const auto& v : face)
      for (const auto& f : other.facets)
        if (dot(f.first, v) > f.second) return false;
    return true;
  };
  auto fa = face_of(a);
  auto fb = face_of(b);
  if (!contained_in_q(fa, b)) return false;
  if (!contained_in_q(fb, a)) return false;
  return fa == fb;
}

}  // namespace detail

// Exact search for a unimodular triangulation: grow a face-to-face complex
// of unimodular cells ridge by ridge.  Any triangulation contains a cell at
// the lex-least vertex, and every unmatched interior ridge must be matched
// by a neighbor on its far side, so branching over those candidates with
// pairwise compatibility is complete.
inline TriState has_unimodular_triangulation(const Polytope64& p,
                                             long long budget = 5000000) {
  const int d = p.dim;
  const i64 target = p.vol;
  if (target == 1) return TriState::True;
  auto subs = enumerate_unimodular_subsimplices(p);
  const int nc = static_cast<int>(subs.simplices.size());
  if (nc < target) return TriState::False;

  std::vector<detail::UnimodCell> cells;
  cells.reserve(static_cast<std::size_t>(nc));
  for (const auto& s : subs.simplices) {
    std::vector<Point64> pts;
    pts.reserve(s.size());
    for (int i : s) pts.push_back(subs.points[static_cast<std::size_t>(i)]);
    cells.push_back(detail::build_cell(pts));
  }
  // index: facet vertex set -> cells having it as a facet
  std::map<std::vector<Point64>, std::vector<int>> by_side;
  for (int c = 0; c < nc; ++c)
    for (const auto& s : cells[static_cast<std::size_t>(c)].sides) by_side[s.pts].push_back(c);

  // boundary test: the ridge's hyperplane is a facet hyperplane of P
  auto on_boundary = [&](const detail::UnimodCell::Side& s) {
    for (const auto& f : p.facets) {
      if (f.normal != s.normal && f.normal != scale(s.normal, i64(-1))) continue;
      i64 b = f.normal == s.normal ? f.offset : -f.offset;
      if (b == s.offset) return true;
    }
    return false;
  };

  std::unordered_map<long long, char> compat_cache;
  auto compatible = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    long long key = static_cast<long long>(i) * nc + j;
    auto it = compat_cache.find(key);
    if (it != compat_cache.end()) return it->second != 0;
    bool ok = detail::face_to_face(cells[static_cast<std::size_t>(i)], cells[static_cast<std::size_t>(j)], d);
    compat_cache[key] = ok ? 1 : 0;
    return ok;
  };

  // open ridges: facet pts -> (away normal, offset) of the side still exposed
  struct Open {
    std::vector<Point64> pts;
    Point64 normal;
    i64 offset;
    bool operator<(const Open& o) const {
      if (pts != o.pts) return pts < o.pts;
      if (normal != o.normal) return normal < o.normal;
      return offset < o.offset;
    }
  };

  long long nodes = 0;
  std::unordered_set<std::size_t> visited;
  auto state_hash = [](const std::vector<int>& chosen) {
    std::size_t h = 1469598103934665603ULL;
    for (int c : chosen) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ULL;
    return h;
  };

  // lex-least vertex of P must be a vertex of some cell
  Point64 v0 = p.verts[0];
  for (const auto& v : p.verts) v0 = std::min(v0, v);

  std::function<bool(std::vector<int>&, std::set<Open>&)> search =
      [&](std::vector<int>& chosen, std::set<Open>& open) -> bool {
    if (++nodes > budget) throw BudgetExceeded();
    if (open.empty())
      return static_cast<i64>(chosen.size()) == target;
    if (static_cast<i64>(chosen.size()) >= target) return false;
    Open ridge = *open.begin();
    auto it = by_side.find(ridge.pts);
    if (it == by_side.end()) return false;
    std::vector<int> sorted_chosen = chosen;
    std::sort(sorted_chosen.begin(), sorted_chosen.end());
    for (int cand : it->second) {
      const auto& cell = cells[static_cast<std::size_t>(cand)];
      // the candidate must lie on the far side of the ridge
      bool far_side = true;
      for (const auto& v : cell.verts)
        if (dot(ridge.normal, v) < ridge.offset) {
          far_side = false;
          break;
        }
      if (!far_side) continue;
      bool ok = true;
      for (int c : chosen)
        if (!compatible(c, cand)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      auto next_sorted = sorted_chosen;
      next_sorted.insert(std::lower_bound(next_sorted.begin(), next_sorted.end(), cand), cand);
      std::size_t h = state_hash(next_sorted);
      if (!visited.insert(h).second) continue;
      // update open ridges
      std::set<Open> next_open = open;
      for (const auto& s : cell.sides) {
        Open mine{s.pts, s.normal, s.offset};
        Open mate{s.pts, scale(s.normal, i64(-1)), -s.offset};
        auto mit = next_open.find(mate);
        if (mit != next_open.end()) {
          next_open.erase(mit);
          continue;
        }
        if (on_boundary(s)) continue;
        next_open.insert(std::move(mine));
      }
      chosen.push_back(cand);
      if (search(chosen, next_open)) return true;
      chosen.pop_back();
    }
    return false;
  };

  try {
    // root: any cell having the lex-least vertex of P as a vertex
    std::vector<int> roots;
    for (int c = 0; c < nc; ++c) {
      const auto& cv = cells[static_cast<std::size_t>(c)].verts;
      if (std::find(cv.begin(), cv.end(), v0) != cv.end()) roots.push_back(c);
    }
    for (int r : roots) {
      std::vector<int> chosen{r};
      std::set<Open> open;
      for (const auto& s : cells[static_cast<std::size_t>(r)].sides) {
        if (on_boundary(s)) continue;
        open.insert({s.pts, s.normal, s.offset});
      }
      if (!visited.insert(state_hash(chosen)).second) continue;
      if (search(chosen, open)) return TriState::True;
    }
    return TriState::False;
  } catch (const BudgetExceeded&) {
    return TriState::NotComputed;
  }
}

// ---------------------------------------------------- unimodular covers --

namespace detail {

struct RatPoint {
  PointZ num;
  Int den{1};
};

struct RatSimplex {
  std::vector<RatPoint> v;
};

inline bool rat_in_cell(const RatPoint& x, const UnimodCell& c) {
  for (const auto& [n, b] : c.facets) {
    Int lhs(0);
    for (std::size_t j = 0; j < x.num.size(); ++j) lhs += Int(n[j]) * x.num[j];
    if (lhs > Int(b) * x.den) return false;
  }
  return true;
}

inline bool simplex_in_cell(const RatSimplex& s, const UnimodCell& c) {
  for (const auto& x : s.v)
    if (!rat_in_cell(x, c)) return false;
  return true;
}

// Split a full-dimensional rational simplex by a hyperplane strictly
// separating its vertices; returns the cells of a triangulation of both
// closed pieces.
inline std::vector<RatSimplex> split_simplex(const RatSimplex& s, const Point64& n, i64 b) {
  const std::size_t d = s.v[0].num.size();
  std::vector<Int> side(s.v.size());
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    Int lhs(0);
    for (std::size_t j = 0; j < d; ++j) lhs += Int(n[j]) * s.v[i].num[j];
    side[i] = lhs - Int(b) * s.v[i].den;
  }
  std::vector<RatPoint> plus, minus;
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    if (side[i] >= 0) plus.push_back(s.v[i]);
    if (side[i] <= 0) minus.push_back(s.v[i]);
  }
  for (std::size_t i = 0; i < s.v.size(); ++i)
    for (std::size_t j = i + 1; j < s.v.size(); ++j) {
      if ((side[i] > 0 && side[j] < 0) || (side[i] < 0 && side[j] > 0)) {
        // crossing of the edge with the hyperplane: with scaled side
        // values s = den·(n·x - b), the point is
        // (s_i N_j - s_j N_i) / (s_i d_j - s_j d_i)
        const Int &si = side[i], &sj = side[j];
        RatPoint w;
        w.den = si * s.v[j].den - sj * s.v[i].den;
        w.num.resize(d);
        for (std::size_t c = 0; c < d; ++c)
          w.num[c] = si * s.v[j].num[c] - sj * s.v[i].num[c];
        if (w.den < 0) {
          w.den = -w.den;
          for (auto& x : w.num) x = -x;
        }
        Int g = w.den;
        for (const auto& x : w.num) g = gcd_of(g, x);
        if (g > 1) {
          w.den /= g;
          for (auto& x : w.num) x /= g;
        }
        plus.push_back(w);
        minus.push_back(std::move(w));
      }
    }
  std::vector<RatSimplex> out;
  for (const auto* piece : {&plus, &minus}) {
    // scale to a common denominator, hull over Int, triangulate
    Int l(1);
    for (const auto& x : *piece) l = l / gcd_of(l, x.den) * x.den;
    std::vector<PointZ> scaled;
    scaled.reserve(piece->size());
    for (const auto& x : *piece) {
      PointZ y(d);
      Int f = l / x.den;
      for (std::size_t c = 0; c < d; ++c) y[c] = x.num[c] * f;
      scaled.push_back(std::move(y));
    }
    PolytopeZ hullz = convex_hull(scaled);
    for (const auto& cell : hullz.triangulation()) {
      RatSimplex rs;
      for (int id : cell) {
        RatPoint x;
        x.num = hullz.verts[static_cast<std::size_t>(id)];
        x.den = l;
        Int g = x.den;
        for (const auto& c : x.num) g = gcd_of(g, c);
        if (g > 1) {
          x.den /= g;
          for (auto& c : x.num) c /= g;
        }
        rs.v.push_back(std::move(x));
      }
      out.push_back(std::move(rs));
    }
  }
  return out;
}

inline RatPoint centroid(const RatSimplex& s) {
  const std::size_t d = s.v[0].num.size();
  Int l(1);
  for (const auto& x : s.v) l = l / gcd_of(l, x.den) * x.den;
  RatPoint c;
  c.num.assign(d, Int(0));
  for (const auto& x : s.v) {
    Int f = l / x.den;
    for (std::size_t j = 0; j < d; ++j) c.num[j] += x.num[j] * f;
  }
  c.den = l * Int(s.v.size());
  return c;
}

}  // namespace detail

// Refinement decision procedure for unimodular covers.  Each cell of an
// exact triangulation of P is either inside one unimodular subsimplex,
// wholly uncovered (witnessed by its centroid: no subsimplex contains it),
// or split by a facet hyperplane of a subsimplex containing its centroid;
// such a hyperplane always strictly separates the cell's vertices, and
// along any branch each hyperplane splits at most once, so the refinement
// terminates.
inline TriState has_unimodular_cover(const Polytope64& p, long long budget = 5000000) {
  if (p.vol == 1) return TriState::True;
  auto subs = enumerate_unimodular_subsimplices(p);
  if (subs.simplices.empty()) return TriState::False;
  std::vector<detail::UnimodCell> cells;
  for (const auto& s : subs.simplices) {
    std::vector<Point64> pts;
    for (int i : s) pts.push_back(subs.points[static_cast<std::size_t>(i)]);
    cells.push_back(detail::build_cell(pts));
  }

  std::vector<detail::RatSimplex> queue;
  for (const auto& cell : p.triangulation()) {
    detail::RatSimplex rs;
    for (int id : cell) {
      detail::RatPoint x;
      x.num = to_pz(p.verts[static_cast<std::size_t>(id)]);
      x.den = 1;
      rs.v.push_back(std::move(x));
    }
    queue.push_back(std::move(rs));
  }

  long long nodes = 0;
  while (!queue.empty()) {
    if (++nodes > budget) return TriState::NotComputed;
    detail::RatSimplex cell = std::move(queue.back());
    queue.pop_back();
    detail::RatPoint c = detail::centroid(cell);
    bool handled = false;
    bool centroid_covered = false;
    for (const auto& uc : cells) {
      if (!detail::rat_in_cell(c, uc)) continue;
      centroid_covered = true;
      if (detail::simplex_in_cell(cell, uc)) {
        handled = true;  // covered
        break;
      }
      // split by a facet of uc that strictly separates the cell
      for (const auto& [n, b] : uc.facets) {
        bool lo = false, hi = false;
        for (const auto& x : cell.v) {
          Int lhs(0);
          for (std::size_t j = 0; j < x.num.size(); ++j) lhs += Int(n[j]) * x.num[j];
          Int rhs = Int(b) * x.den;
          if (lhs < rhs) lo = true;
          if (lhs > rhs) hi = true;
          if (lo && hi) break;
        }
        if (lo && hi) {
          for (auto& piece : detail::split_simplex(cell, n, b)) queue.push_back(std::move(piece));
          handled = true;
          break;
        }
      }
      if (handled) break;
      // centroid inside uc but no facet separates: then the cell lies in
      // every closed halfspace of uc, contradicting the containment test
      throw PreconditionViolated("cover refinement reached an inconsistent cell");
    }
    if (!centroid_covered) return TriState::False;
    if (!handled) throw PreconditionViolated("cover refinement made no progress");
  }
  return TriState::True;
}

// -------------------------------------------------------- smooth structure --

enum class SmoothClass { UnimodularSimplex, LawrencePrism, Contradiction };

struct SmoothStructure {
  SmoothClass kind = SmoothClass::Contradiction;
  std::vector<i64> heights;  // for LawrencePrism, ordered by base vertex
};

// Classifier for smooth polytopes with at most 3d-4 lattice points: they
// are the unimodular simplex or a Lawrence prism with all heights >= 1.
inline SmoothStructure smooth_structure(const Polytope64& p) {
  const int d = p.dim;
  if (!is_smooth(p) || p.count_points(false) > 3 * d - 4)
    throw PreconditionViolated("smooth_structure needs a smooth polytope with <= 3d-4 points");
  SmoothStructure out;
  if (p.num_vertices() == d + 1 && p.vol == 1) {
    out.kind = SmoothClass::UnimodularSimplex;
    return out;
  }
  auto nbr = vertex_neighbors(p);
  for (const auto& f : p.facets) {
    if (static_cast<int>(f.incident.size()) != d) continue;
    // try this facet as the unimodular base
    int b0 = f.incident[0];
    // edge directions at b0: the d-1 inside the facet plus the vertical one
    std::vector<int> base_ids = f.incident;
    std::vector<Point64> dirs;
    int vertical = -1;
    bool good = true;
    for (int w : nbr[static_cast<std::size_t>(b0)]) {
      if (std::find(base_ids.begin(), base_ids.end(), w) != base_ids.end()) continue;
      if (vertical >= 0) {
        good = false;
        break;
      }
      vertical = w;
    }
    if (!good || vertical < 0) continue;
    Matrix64 e(d, d);
    std::vector<int> order;  // base vertices in the order matching e_1..e_{d-1}
    for (int i = 1; i < d; ++i) order.push_back(base_ids[static_cast<std::size_t>(i)]);
    for (int i = 0; i < d - 1; ++i) {
      Point64 dir = sub(p.verts[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
                        p.verts[static_cast<std::size_t>(b0)]);
      for (int j = 0; j < d; ++j) e(j, i) = dir[static_cast<std::size_t>(j)];
    }
    Point64 vdir = primitive(sub(p.verts[static_cast<std::size_t>(vertical)], p.verts[static_cast<std::size_t>(b0)]));
    for (int j = 0; j < d; ++j) e(j, d - 1) = vdir[static_cast<std::size_t>(j)];
    i64 det = det_checked(e);
    if (det != 1 && det != -1) continue;  // base not unimodular with this vertical
    Matrix64 a = unimodular_inverse(e);
    // image vertex coordinates: a * (v - b0)
    auto image = [&](int vid) {
      Point64 y(static_cast<std::size_t>(d));
      Point64 rel = sub(p.verts[static_cast<std::size_t>(vid)], p.verts[static_cast<std::size_t>(b0)]);
      for (int i = 0; i < d; ++i) {
        i64 s = 0;
        for (int j = 0; j < d; ++j) s += a(i, j) * rel[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
      }
      return y;
    };
    std::vector<i64> heights(static_cast<std::size_t>(d), 0);
    bool fits = p.num_vertices() == 2 * d;
    for (int vid = 0; vid < p.num_vertices() && fits; ++vid) {
      Point64 y = image(vid);
      int base = -1;
      i64 height = y[static_cast<std::size_t>(d - 1)];
      bool unit_row = true;
      int unit_at = -1;
      for (int j = 0; j < d - 1; ++j) {
        if (y[static_cast<std::size_t>(j)] == 1 && unit_at < 0)
          unit_at = j;
        else if (y[static_cast<std::size_t>(j)] != 0)
          unit_row = false;
      }
      if (!unit_row) {
        fits = false;
        break;
      }
      base = unit_at < 0 ? 0 : unit_at + 1;
      if (height == 0) {
        // base copy: nothing to record
      } else if (height >= 1) {
        if (heights[static_cast<std::size_t>(base)] != 0) fits = false;
        heights[static_cast<std::size_t>(base)] = height;
      } else {
        fits = false;
      }
    }
    if (!fits) continue;
    for (i64 a_i : heights)
      if (a_i < 1) fits = false;
    if (!fits) continue;
    i64 sum = 0;
    for (i64 a_i : heights) sum += a_i;
    if (sum != p.vol) continue;
    out.kind = SmoothClass::LawrencePrism;
    out.heights = heights;
    return out;
  }
  out.kind = SmoothClass::Contradiction;
  return out;
}

// Segmental-fibration family Q_k: very ample for all k, IDP iff k <= 3,
// h* = (1, 4, k+1, 0).
inline Polytope64 segmental_q(i64 k) {
  if (k < 0) throw PreconditionViolated("segmental_q needs k >= 0");
  std::vector<Point64> pts = {{0, 0, 0},      {1, 0, 0},      {0, 1, 0},
                              {0, 0, 1},      {1, 0, 1},      {0, 1, 1},
                              {1, 1, k},      {1, 1, k + 1}};
  Polytope64 p = convex_hull(pts);
  auto h = h_star(p).h;
  if (h != std::vector<Int>{1, 4, k + 1, 0})
    throw PreconditionViolated("segmental_q family has unexpected h*");
  return p;
}

// Full tri-state property computation with per-predicate budgets.
inline PropertyRecord analyze_polytope(const Polytope64& p, bool want_spanning, bool want_smooth,
                                       bool want_va, bool want_idp, bool want_uc, bool want_ut,
                                       long long budget = 5000000, int idp_max_degree = 0) {
  PropertyRecord r;
  if (want_spanning) r.spanning = is_spanning(p) ? TriState::True : TriState::False;
  if (want_smooth) r.smooth = is_smooth(p) ? TriState::True : TriState::False;
  if (want_va) r.very_ample = is_very_ample(p) ? TriState::True : TriState::False;
  if (want_idp) r.idp = is_idp(p, idp_max_degree) ? TriState::True : TriState::False;
  if (want_uc) r.unimodular_cover = has_unimodular_cover(p, budget);
  if (want_ut) r.unimodular_triangulation = has_unimodular_triangulation(p, budget);
  return r;
}

}  // namespace latpoly
