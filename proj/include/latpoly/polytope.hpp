#pragma once

// Full-dimensional lattice polytopes with exact H- and V-representation.
//
// A polytope carries its vertex set, its irredundant facet list (primitive
// inward normals, normal·x <= offset), a triangulation of each facet, and
// its normalized volume (d! times euclidean volume).  Hulls are built
// incrementally; adding a point updates facets by brute-force support-
// hyperplane search over (d-1)-subsets of the current vertices, which is
// exact and cheap in the dimensions this library targets (d <= 7).

#include "latpoly/point.hpp"

#include <atomic>
#include <map>
#include <optional>
#include <set>

namespace latpoly {

// Exact determinant with a checked narrowing back to T.
template <class T>
T det_checked(const Matrix<T>& m) {
  return det_bareiss(m);
}
inline i64 det_checked(const Matrix64& m) {
  if (auto d = det_i64_fast(m)) return *d;
  return to_i64_checked(det_bareiss(m.cast<Int>()));
}

// Normalized volume of the simplex spanned by d+1 points (0 if degenerate).
template <class T>
T simplex_volume(const std::vector<Point<T>>& pts) {
  const int d = static_cast<int>(pts[0].size());
  if (static_cast<int>(pts.size()) != d + 1)
    throw PreconditionViolated("simplex_volume expects d+1 points");
  Matrix<T> m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = pts[i + 1][j] - pts[0][j];
  T det = det_checked(m);
  return det < 0 ? T(-det) : det;
}

// Signed determinant of the (d+1)x(d+1) matrix with a row of ones on top
// and the points as columns.
template <class T>
T ones_bordered_det(const std::vector<Point<T>>& pts) {
  const int d = static_cast<int>(pts[0].size());
  Matrix<T> m(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    m(0, j) = T(1);
    for (int i = 0; i < d; ++i) m(i + 1, j) = pts[j][i];
  }
  return det_checked(m);
}

// Normal of the hyperplane through d points (zero vector if they do not
// span one).  Components are cofactors of the difference matrix.
template <class T>
Point<T> hyperplane_normal(const std::vector<Point<T>>& pts) {
  const int d = static_cast<int>(pts[0].size());
  Point<T> n(static_cast<std::size_t>(d), T(0));
  if (d == 1) {
    n[0] = T(1);
    return n;
  }
  Matrix<T> diff(d - 1, d);
  for (int i = 0; i < d - 1; ++i)
    for (int j = 0; j < d; ++j) diff(i, j) = pts[i + 1][j] - pts[0][j];
  Matrix<T> minor(d - 1, d - 1);
  for (int skip = 0; skip < d; ++skip) {
    for (int i = 0; i < d - 1; ++i) {
      int cc = 0;
      for (int j = 0; j < d; ++j) {
        if (j == skip) continue;
        minor(i, cc++) = diff(i, j);
      }
    }
    T c = det_checked(minor);
    n[static_cast<std::size_t>(skip)] = (skip % 2 == 0) ? c : T(-c);
  }
  return n;
}

template <class T>
struct Facet {
  Point<T> normal;  // primitive, inward: normal·x <= offset on the polytope
  T offset;
  std::vector<int> incident;             // vertex ids on the facet
  std::vector<std::vector<int>> cells;   // facet triangulation, d ids per cell
};

template <class V>
class LazyCache {
 public:
  LazyCache() = default;
  LazyCache(const LazyCache& o) {
    if (const V* p = o.ptr_.load(std::memory_order_acquire)) ptr_.store(new V(*p));
  }
  LazyCache& operator=(const LazyCache& o) {
    if (this != &o) {
      delete ptr_.exchange(nullptr);
      if (const V* p = o.ptr_.load(std::memory_order_acquire)) ptr_.store(new V(*p));
    }
    return *this;
  }
  LazyCache(LazyCache&& o) noexcept { ptr_.store(o.ptr_.exchange(nullptr)); }
  LazyCache& operator=(LazyCache&& o) noexcept {
    if (this != &o) delete ptr_.exchange(o.ptr_.exchange(nullptr));
    return *this;
  }
  ~LazyCache() { delete ptr_.load(); }

  template <class F>
  const V& get(F&& compute) const {
    if (const V* p = ptr_.load(std::memory_order_acquire)) return *p;
    V* fresh = new V(compute());
    const V* expected = nullptr;
    if (!ptr_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
      delete fresh;
      return *expected;
    }
    return *fresh;
  }

 private:
  mutable std::atomic<const V*> ptr_{nullptr};
};

template <class T>
class Polytope {
 public:
  int dim = 0;
  std::vector<Point<T>> verts;
  std::vector<Facet<T>> facets;
  T vol = T(0);

  int num_vertices() const { return static_cast<int>(verts.size()); }

  bool contains(const Point<T>& p, bool strict = false) const {
    for (const auto& f : facets) {
      T v = dot(f.normal, p);
      if (strict ? !(v < f.offset) : !(v <= f.offset)) return false;
    }
    return true;
  }

  // Fan triangulation from vertex 0: one cell per facet cell away from it.
  const std::vector<std::vector<int>>& triangulation() const {
    return tri_cache_.get([this] {
      std::vector<std::vector<int>> cells;
      if (num_vertices() == dim + 1) {
        std::vector<int> all(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
        cells.push_back(all);
        return cells;
      }
      for (const auto& f : facets) {
        bool has0 = false;
        for (int v : f.incident)
          if (v == 0) {
            has0 = true;
            break;
          }
        if (has0) continue;
        for (const auto& c : f.cells) {
          std::vector<int> cell;
          cell.reserve(c.size() + 1);
          cell.push_back(0);
          cell.insert(cell.end(), c.begin(), c.end());
          cells.push_back(std::move(cell));
        }
      }
      return cells;
    });
  }

  const std::vector<Point<T>>& lattice_points_cached() const {
    return pts_cache_.get([this] { return enumerate_points(false); });
  }
  const std::vector<Point<T>>& interior_points_cached() const {
    return int_cache_.get([this] { return enumerate_points(true); });
  }

  std::vector<Point<T>> enumerate_points(bool strict) const;
  long long count_points(bool strict) const;

 private:
  LazyCache<std::vector<Point<T>>> pts_cache_;
  LazyCache<std::vector<Point<T>>> int_cache_;
  LazyCache<std::vector<std::vector<int>>> tri_cache_;
};

using Polytope64 = Polytope<i64>;
using PolytopeZ = Polytope<Int>;

// ------------------------------------------------------------ projection --

// Unimodular matrix whose last row is the given primitive vector.
template <class T>
Matrix<T> complete_to_unimodular(const Point<T>& n) {
  const int d = static_cast<int>(n.size());
  Point<T> v = n;
  Matrix<T> u = Matrix<T>::identity(d);  // column ops accumulate here: n·u = e_d
  for (int j = 0; j < d - 1; ++j) {
    if (v[j] == 0) continue;
    // Extended gcd of (v[d-1], v[j]) via a 2x2 unimodular column op.
    T a = v[d - 1], b = v[j];
    T x0(1), y0(0), x1(0), y1(1);  // (x,y) with x*a0 + y*b0 = current
    T a0 = a, b0 = b;
    while (b != 0) {
      T q = floor_div(a, b);
      T r = a - q * b;
      a = b;
      b = r;
      T nx = x0 - q * x1, ny = y0 - q * y1;
      x0 = x1;
      y0 = y1;
      x1 = nx;
      y1 = ny;
    }
    // a = gcd = x0*a0 + y0*b0
    T g = a, s = x0, t = y0;
    T p = a0 / g, q = b0 / g;
    // col_{d-1}' = s*col_{d-1} + t*col_j ; col_j' = -q*col_{d-1} + p*col_j
    for (int i = 0; i < d; ++i) {
      T cd = u(i, d - 1), cj = u(i, j);
      u(i, d - 1) = s * cd + t * cj;
      u(i, j) = p * cj - q * cd;
    }
    v[d - 1] = g;
    v[static_cast<std::size_t>(j)] = T(0);
  }
  if (v[d - 1] < 0) {
    for (int i = 0; i < d; ++i) u(i, d - 1) = -u(i, d - 1);
    v[d - 1] = -v[d - 1];
  }
  if (v[d - 1] != 1) throw PreconditionViolated("normal must be primitive");
  // A = u^{-1}; |det u| = 1 so the adjugate is exact.
  Matrix<T> adj(d, d);
  Matrix<T> minor(d - 1, d - 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int rr = 0;
      for (int r = 0; r < d; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < d; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = u(r, c);
        }
        ++rr;
      }
      T cof = det_checked(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? cof : T(-cof);
    }
  T du = det_checked(u);
  if (du == -1)
    for (auto& x : adj.a) x = -x;
  return adj;
}

template <class T>
Matrix<T> unimodular_inverse(const Matrix<T>& u) {
  const int d = u.rows;
  Matrix<T> adj(d, d);
  Matrix<T> minor(d - 1, d - 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int rr = 0;
      for (int r = 0; r < d; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < d; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = u(r, c);
        }
        ++rr;
      }
      T cof = det_checked(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? cof : T(-cof);
    }
  T du = det_checked(u);
  if (du == 1) return adj;
  if (du == -1) {
    for (auto& x : adj.a) x = -x;
    return adj;
  }
  throw PreconditionViolated("matrix is not unimodular");
}

// ------------------------------------------------------------------ hull --

template <class T>
Polytope<T> convex_hull(const std::vector<Point<T>>& pts);

namespace detail {

// Triangulate a facet polygon: project its vertices along the facet normal
// into Z^{d-1}, hull recursively, lift the cells back.
template <class T>
std::vector<std::vector<int>> triangulate_facet(const std::vector<Point<T>>& verts,
                                                const Facet<T>& f) {
  const int d = static_cast<int>(f.normal.size());
  if (static_cast<int>(f.incident.size()) == d) return {f.incident};
  Matrix<T> a = complete_to_unimodular(f.normal);
  std::vector<Point<T>> proj;
  proj.reserve(f.incident.size());
  for (int id : f.incident) {
    Point<T> y(static_cast<std::size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) {
      T s(0);
      for (int j = 0; j < d; ++j) s += a(i, j) * verts[static_cast<std::size_t>(id)][j];
      y[static_cast<std::size_t>(i)] = s;
    }
    proj.push_back(std::move(y));
  }
  Polytope<T> sub = convex_hull(proj);
  // convex_hull preserves input points as ids only for its own vertex list;
  // incident facet vertices are in convex position, so ids line up.
  std::vector<int> back(sub.verts.size());
  for (std::size_t i = 0; i < sub.verts.size(); ++i) {
    int found = -1;
    for (std::size_t k = 0; k < proj.size(); ++k)
      if (proj[k] == sub.verts[i]) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) throw PreconditionViolated("facet projection lost a vertex");
    back[i] = f.incident[static_cast<std::size_t>(found)];
  }
  std::vector<std::vector<int>> cells;
  for (const auto& c : sub.triangulation()) {
    std::vector<int> cell(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cell[i] = back[static_cast<std::size_t>(c[i])];
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace detail

// Simplex from d+1 affinely independent points.
template <class T>
Polytope<T> make_simplex(const std::vector<Point<T>>& pts) {
  const int d = static_cast<int>(pts[0].size());
  if (static_cast<int>(pts.size()) != d + 1)
    throw PreconditionViolated("make_simplex expects d+1 points");
  Polytope<T> p;
  p.dim = d;
  p.verts = pts;
  p.vol = simplex_volume(pts);
  if (p.vol == 0) throw NotFullDimensional();
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<Point<T>> on;
    std::vector<int> ids;
    for (int i = 0; i <= d; ++i)
      if (i != skip) {
        on.push_back(pts[static_cast<std::size_t>(i)]);
        ids.push_back(i);
      }
    Point<T> n = primitive(hyperplane_normal(on));
    T b = dot(n, on[0]);
    T inside = dot(n, pts[static_cast<std::size_t>(skip)]);
    if (inside > b) {
      for (auto& x : n) x = -x;
      b = -b;
    }
    Facet<T> f;
    f.normal = std::move(n);
    f.offset = b;
    f.incident = ids;
    f.cells = {ids};
    p.facets.push_back(std::move(f));
  }
  return p;
}

// Hull of (vertices of P) together with one more point p.
// Returns nullopt when p is already inside P (no growth), or when the grown
// volume would exceed *max_vol.
template <class T>
std::optional<Polytope<T>> extend(const Polytope<T>& P, const Point<T>& p,
                                  const T* max_vol = nullptr) {
  const int d = P.dim;
  const int n = P.num_vertices();
  std::vector<T> eval(P.facets.size());
  bool outside = false;
  for (std::size_t i = 0; i < P.facets.size(); ++i) {
    eval[i] = dot(P.facets[i].normal, p) - P.facets[i].offset;
    if (eval[i] > 0) outside = true;
  }
  if (!outside) return std::nullopt;

  // Exact grown volume: pyramids over the visible facet cells.
  T grown = P.vol;
  {
    Matrix<T> m(d, d);
    for (std::size_t i = 0; i < P.facets.size(); ++i) {
      if (eval[i] <= 0) continue;
      for (const auto& c : P.facets[i].cells) {
        const Point<T>& base = P.verts[static_cast<std::size_t>(c[0])];
        for (int r = 0; r + 1 < d; ++r)
          for (int j = 0; j < d; ++j)
            m(r, j) = P.verts[static_cast<std::size_t>(c[static_cast<std::size_t>(r) + 1])][j] - base[j];
        for (int j = 0; j < d; ++j) m(d - 1, j) = p[static_cast<std::size_t>(j)] - base[j];
        T det = det_checked(m);
        grown += det < 0 ? T(-det) : det;
        if (max_vol && grown > *max_vol) return std::nullopt;
      }
    }
  }
  if (max_vol && grown > *max_vol) return std::nullopt;

  // New facet set: strictly invisible facets survive; facets through p are
  // found by support-hyperplane search over (d-1)-subsets of old vertices.
  std::vector<Facet<T>> kept;
  for (std::size_t i = 0; i < P.facets.size(); ++i)
    if (eval[i] < 0) kept.push_back(P.facets[i]);

  std::set<std::pair<Point<T>, T>> seen;
  std::vector<Facet<T>> fresh;
  std::vector<int> idx(static_cast<std::size_t>(std::max(d - 1, 0)));
  std::vector<Point<T>> span(static_cast<std::size_t>(d));
  auto try_subset = [&](const std::vector<int>& sel) {
    span[0] = p;
    for (std::size_t i = 0; i < sel.size(); ++i)
      span[i + 1] = P.verts[static_cast<std::size_t>(sel[i])];
    Point<T> nrm = hyperplane_normal(span);
    if (is_zero(nrm)) return;
    nrm = primitive(std::move(nrm));
    T b = dot(nrm, p);
    bool lo = false, hi = false;
    for (int i = 0; i < n; ++i) {
      T v = dot(nrm, P.verts[static_cast<std::size_t>(i)]);
      if (v > b) hi = true;
      else if (v < b) lo = true;
      if (lo && hi) return;
    }
    if (hi) {
      for (auto& x : nrm) x = -x;
      b = -b;
    } else if (!lo) {
      return;  // everything coplanar with p: impossible for full-dim input
    }
    if (!seen.insert({nrm, b}).second) return;
    Facet<T> f;
    f.normal = std::move(nrm);
    f.offset = b;
    fresh.push_back(std::move(f));
  };
  // Iterate (d-1)-subsets of old vertex ids.
  if (d == 1) {
    try_subset({});
  } else {
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) idx[static_cast<std::size_t>(i)] = i;
    if (n >= d - 1) {
      while (true) {
        try_subset(idx);
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - (static_cast<int>(idx.size()) - k))
          --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < static_cast<int>(idx.size()); ++j)
          idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  Polytope<T> q;
  q.dim = d;
  q.vol = grown;

  // Candidate vertices: old ones plus p; a candidate is a vertex iff its
  // active facet normals span the full space.
  std::vector<Point<T>> cand = P.verts;
  cand.push_back(p);
  std::vector<Facet<T>> all = std::move(kept);
  for (auto& f : fresh) all.push_back(std::move(f));

  std::vector<int> old2new(cand.size(), -1);
  for (std::size_t ci = 0; ci < cand.size(); ++ci) {
    int na = 0;
    for (const auto& f : all)
      if (dot(f.normal, cand[ci]) == f.offset) ++na;
    if (na < d) continue;
    Matrix<T> sub(na, d);
    int r = 0;
    for (const auto& f : all)
      if (dot(f.normal, cand[ci]) == f.offset) {
        for (int j = 0; j < d; ++j) sub(r, j) = f.normal[static_cast<std::size_t>(j)];
        ++r;
      }
    if (rank_of(sub) == d) {
      old2new[ci] = q.num_vertices();
      q.verts.push_back(cand[ci]);
    }
  }

  for (auto& f : all) {
    f.incident.clear();
    for (std::size_t ci = 0; ci < cand.size(); ++ci)
      if (old2new[ci] >= 0 && dot(f.normal, cand[ci]) == f.offset)
        f.incident.push_back(old2new[ci]);
  }
  // Remap kept cells; rebuild the rest.
  for (std::size_t fi = 0; fi < all.size(); ++fi) {
    auto& f = all[fi];
    if (!f.cells.empty()) {
      for (auto& c : f.cells)
        for (auto& id : c) id = old2new[static_cast<std::size_t>(id)];
      continue;
    }
    f.cells = detail::triangulate_facet(q.verts, f);
  }
  q.facets = std::move(all);
  return q;
}

template <class T>
Polytope<T> convex_hull(const std::vector<Point<T>>& pts) {
  if (pts.empty()) throw NotFullDimensional();
  const int d = static_cast<int>(pts[0].size());
  if (d == 0) throw NotFullDimensional();
  // Greedy affinely independent subset of size d+1.
  std::vector<std::size_t> base{0};
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(base.size()) <= d; ++i) {
    int r = static_cast<int>(base.size()) - 1;
    Matrix<T> m(r + 1, d);
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < d; ++j) m(k, j) = pts[base[static_cast<std::size_t>(k) + 1]][j] - pts[base[0]][j];
    for (int j = 0; j < d; ++j) m(r, j) = pts[i][j] - pts[base[0]][j];
    if (rank_of(m) == r + 1) base.push_back(i);
  }
  if (static_cast<int>(base.size()) != d + 1) throw NotFullDimensional();
  std::vector<Point<T>> simplex_pts;
  for (std::size_t i : base) simplex_pts.push_back(pts[i]);
  Polytope<T> p = make_simplex(simplex_pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::find(base.begin(), base.end(), i) != base.end()) continue;
    if (auto q = extend(p, pts[i])) p = std::move(*q);
  }
  return p;
}

// --------------------------------------------------------- lattice points --

template <class T>
std::vector<Point<T>> Polytope<T>::enumerate_points(bool strict) const {
  std::vector<Point<T>> out;
  const int d = dim;
  std::vector<T> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    lo[static_cast<std::size_t>(j)] = verts[0][static_cast<std::size_t>(j)];
    hi[static_cast<std::size_t>(j)] = verts[0][static_cast<std::size_t>(j)];
    for (const auto& v : verts) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
    }
  }
  const std::size_t m = facets.size();
  std::vector<T> off(m);
  std::vector<int> maxidx(m, -1);
  for (std::size_t f = 0; f < m; ++f) {
    off[f] = strict ? T(facets[f].offset - 1) : facets[f].offset;
    for (int j = d - 1; j >= 0; --j)
      if (facets[f].normal[static_cast<std::size_t>(j)] != 0) {
        maxidx[f] = j;
        break;
      }
  }
  std::vector<T> partial(m, T(0));
  Point<T> x(static_cast<std::size_t>(d));

  auto rec = [&](auto&& self, int level) -> void {
    if (level == d - 1) {
      T L = lo[static_cast<std::size_t>(level)], H = hi[static_cast<std::size_t>(level)];
      for (std::size_t f = 0; f < m; ++f) {
        if (maxidx[f] != level) continue;
        const T& c = facets[f].normal[static_cast<std::size_t>(level)];
        T r = off[f] - partial[f];
        if (c > 0)
          H = std::min(H, floor_div(r, c));
        else
          L = std::max(L, ceil_div(r, c));
      }
      for (T v = L; v <= H; ++v) {
        x[static_cast<std::size_t>(level)] = v;
        out.push_back(x);
      }
      return;
    }
    for (T v = lo[static_cast<std::size_t>(level)]; v <= hi[static_cast<std::size_t>(level)]; ++v) {
      x[static_cast<std::size_t>(level)] = v;
      bool ok = true;
      for (std::size_t f = 0; f < m; ++f) {
        partial[f] += facets[f].normal[static_cast<std::size_t>(level)] * v;
        if (maxidx[f] == level && partial[f] > off[f]) ok = false;
      }
      if (ok) self(self, level + 1);
      for (std::size_t f = 0; f < m; ++f)
        partial[f] -= facets[f].normal[static_cast<std::size_t>(level)] * v;
    }
  };
  rec(rec, 0);
  return out;
}

template <class T>
long long Polytope<T>::count_points(bool strict) const {
  const int d = dim;
  std::vector<T> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    lo[static_cast<std::size_t>(j)] = verts[0][static_cast<std::size_t>(j)];
    hi[static_cast<std::size_t>(j)] = verts[0][static_cast<std::size_t>(j)];
    for (const auto& v : verts) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
    }
  }
  const std::size_t m = facets.size();
  std::vector<T> off(m);
  std::vector<int> maxidx(m, -1);
  for (std::size_t f = 0; f < m; ++f) {
    off[f] = strict ? T(facets[f].offset - 1) : facets[f].offset;
    for (int j = d - 1; j >= 0; --j)
      if (facets[f].normal[static_cast<std::size_t>(j)] != 0) {
        maxidx[f] = j;
        break;
      }
  }
  std::vector<T> partial(m, T(0));
  long long count = 0;

  auto rec = [&](auto&& self, int level) -> void {
    if (level == d - 1) {
      T L = lo[static_cast<std::size_t>(level)], H = hi[static_cast<std::size_t>(level)];
      for (std::size_t f = 0; f < m; ++f) {
        if (maxidx[f] != level) continue;
        const T& c = facets[f].normal[static_cast<std::size_t>(level)];
        T r = off[f] - partial[f];
        if (c > 0)
          H = std::min(H, floor_div(r, c));
        else
          L = std::max(L, ceil_div(r, c));
      }
      if (H >= L) count += static_cast<long long>(H - L) + 1;
      return;
    }
    for (T v = lo[static_cast<std::size_t>(level)]; v <= hi[static_cast<std::size_t>(level)]; ++v) {
      bool ok = true;
      for (std::size_t f = 0; f < m; ++f) {
        partial[f] += facets[f].normal[static_cast<std::size_t>(level)] * v;
        if (maxidx[f] == level && partial[f] > off[f]) ok = false;
      }
      if (ok) self(self, level + 1);
      for (std::size_t f = 0; f < m; ++f)
        partial[f] -= facets[f].normal[static_cast<std::size_t>(level)] * v;
    }
  };
  rec(rec, 0);
  return count;
}

// Free-function forms mirroring the cached accessors.
template <class T>
std::vector<Point<T>> lattice_points(const Polytope<T>& p, bool strict = false) {
  return p.enumerate_points(strict);
}

template <class T>
Polytope<T> dilate(const Polytope<T>& p, const T& t) {
  Polytope<T> q;
  q.dim = p.dim;
  q.verts.reserve(p.verts.size());
  for (const auto& v : p.verts) q.verts.push_back(scale(v, t));
  q.facets = p.facets;
  for (auto& f : q.facets) f.offset *= t;
  q.vol = p.vol;
  for (int i = 0; i < p.dim; ++i) q.vol *= t;
  return q;
}

// Image under the affine unimodular map x -> linear·x + shift.
template <class T>
Polytope<T> transform(const Polytope<T>& p, const Matrix<T>& linear, const Point<T>& shift) {
  Matrix<T> inv = unimodular_inverse(linear);
  Polytope<T> q;
  q.dim = p.dim;
  q.vol = p.vol;
  const int d = p.dim;
  for (const auto& v : p.verts) {
    Point<T> w(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      T s = shift[static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j) s += linear(i, j) * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s;
    }
    q.verts.push_back(std::move(w));
  }
  q.facets = p.facets;
  for (auto& f : q.facets) {
    Point<T> n(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      T s(0);
      for (int i = 0; i < d; ++i) s += f.normal[static_cast<std::size_t>(i)] * inv(i, j);
      n[static_cast<std::size_t>(j)] = s;
    }
    f.offset += dot(n, shift);
    f.normal = std::move(n);
  }
  return q;
}

}  // namespace latpoly
