#pragma once

// Pointed rational cones, their triangulations, and Hilbert bases.

#include "latpoly/polytope.hpp"

#include <set>

namespace latpoly {

struct Cone64 {
  int dim = 0;
  std::vector<Point64> rays;           // primitive generators
  std::vector<Point64> facet_normals;  // facet description: n·x <= 0
  std::vector<int> extreme;            // indices of extreme rays

  bool contains(const Point64& x) const {
    for (const auto& n : facet_normals)
      if (dot(n, x) > 0) return false;
    return true;
  }
};

// Build a pointed full-dimensional cone from generators (apex at the origin).
inline Cone64 make_cone(const std::vector<Point64>& generators) {
  if (generators.empty()) throw NotPointed();
  const int d = static_cast<int>(generators[0].size());
  Cone64 c;
  c.dim = d;
  std::set<Point64> seen;
  for (const auto& g : generators) {
    if (is_zero(g)) continue;
    Point64 r = primitive(g);
    if (seen.insert(r).second) c.rays.push_back(std::move(r));
  }
  std::vector<Point64> pts{Point64(static_cast<std::size_t>(d), 0)};
  pts.insert(pts.end(), c.rays.begin(), c.rays.end());
  Polytope64 hullp = convex_hull(pts);  // throws NotFullDimensional if flat
  // the origin must be a vertex, else the cone contains a line
  int zero_id = -1;
  for (int i = 0; i < hullp.num_vertices(); ++i)
    if (is_zero(hullp.verts[static_cast<std::size_t>(i)])) zero_id = i;
  if (zero_id < 0) throw NotPointed();
  for (const auto& f : hullp.facets)
    if (f.offset == 0) c.facet_normals.push_back(f.normal);
  // extreme rays: active facet normals span a (d-1)-dimensional space
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    std::vector<const Point64*> active;
    for (const auto& n : c.facet_normals)
      if (dot(n, c.rays[i]) == 0) active.push_back(&n);
    if (static_cast<int>(active.size()) < d - 1) continue;
    Matrix64 m(static_cast<int>(active.size()), d);
    for (std::size_t r = 0; r < active.size(); ++r)
      for (int j = 0; j < d; ++j) m(static_cast<int>(r), j) = (*active[r])[static_cast<std::size_t>(j)];
    if (rank_of(m) == d - 1) c.extreme.push_back(static_cast<int>(i));
  }
  return c;
}

// Triangulation of the cone into simplicial subcones spanned by extreme
// rays (indices into c.rays).
inline std::vector<std::vector<int>> triangulate_cone(const Cone64& c) {
  const int d = c.dim;
  std::vector<int> ext = c.extreme;
  if (static_cast<int>(ext.size()) < d) throw PreconditionViolated("cone is not full-dimensional");
  if (static_cast<int>(ext.size()) == d) return {ext};
  const int pivot = ext[0];
  std::vector<std::vector<int>> cells;
  for (const auto& n : c.facet_normals) {
    if (dot(n, c.rays[static_cast<std::size_t>(pivot)]) == 0) continue;  // pivot on the facet
    std::vector<int> on;
    for (int i : ext)
      if (dot(n, c.rays[static_cast<std::size_t>(i)]) == 0) on.push_back(i);
    // project the facet cone into Z^{d-1} and recurse
    Matrix64 a = complete_to_unimodular(n);
    std::vector<Point64> proj;
    proj.reserve(on.size());
    for (int i : on) {
      Point64 y(static_cast<std::size_t>(d - 1));
      for (int r = 0; r < d - 1; ++r) {
        i64 s = 0;
        for (int j = 0; j < d; ++j) s += a(r, j) * c.rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(r)] = s;
      }
      proj.push_back(std::move(y));
    }
    Cone64 sub = make_cone(proj);
    // make_cone preserves the order of primitive, distinct generators
    if (sub.rays.size() != on.size())
      throw PreconditionViolated("facet cone lost generators under projection");
    for (const auto& cell : triangulate_cone(sub)) {
      std::vector<int> lifted;
      lifted.reserve(cell.size() + 1);
      lifted.push_back(pivot);
      for (int li : cell) lifted.push_back(on[static_cast<std::size_t>(li)]);
      cells.push_back(std::move(lifted));
    }
  }
  return cells;
}

// Lattice points of the half-open parallelepiped of a simplicial cone
// (excluding the origin).
inline std::vector<Point64> parallelepiped_points(const std::vector<Point64>& rays) {
  const int d = static_cast<int>(rays.size());
  Matrix64 r(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) r(i, j) = rays[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  i64 det = det_checked(r);
  if (det == 0) throw PreconditionViolated("rays are dependent");
  // adjugate for exact Cramer floors
  Matrix64 adj(d, d);
  {
    Matrix64 minor(d - 1, d - 1);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int rr = 0;
        for (int x = 0; x < d; ++x) {
          if (x == j) continue;
          int cc = 0;
          for (int y = 0; y < d; ++y) {
            if (y == i) continue;
            minor(rr, cc++) = r(x, y);
          }
          ++rr;
        }
        i64 cof = det_checked(minor);
        adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
      }
  }
  // coset representatives of Z^d / R Z^d from a triangular lattice basis
  Matrix64 rt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rt(i, j) = r(j, i);
  Matrix64 basis_t = row_hnf(rt).h;  // upper triangular; its transpose is a basis
  std::vector<Point64> out;
  Point64 y(static_cast<std::size_t>(d), 0);
  auto emit = [&]() {
    // reduce y into the parallelepiped: subtract floor(lambda_i) * ray_i
    Point64 x = y;
    Point64 lam_floor(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      i64 num = 0;
      for (int j = 0; j < d; ++j) num += adj(i, j) * x[static_cast<std::size_t>(j)];
      if (det < 0) num = -num;
      lam_floor[static_cast<std::size_t>(i)] = floor_div(num, det < 0 ? -det : det);
    }
    for (int i = 0; i < d; ++i)
      if (lam_floor[static_cast<std::size_t>(i)] != 0)
        for (int j = 0; j < d; ++j)
          x[static_cast<std::size_t>(j)] -=
              lam_floor[static_cast<std::size_t>(i)] * rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (!is_zero(x)) out.push_back(std::move(x));
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) {
      emit();
      return;
    }
    for (i64 v = 0; v < basis_t(i, i); ++v) {
      y[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Minimal monoid generating set of cone ∩ Z^d: candidates from the ray set
// and the parallelepiped points of any simplicial triangulation, minimized
// by removing elements that split as sums of two nonzero cone points.
inline std::vector<Point64> hilbert_basis(const Cone64& c) {
  std::set<Point64> cand(c.rays.begin(), c.rays.end());
  for (const auto& cell : triangulate_cone(c)) {
    std::vector<Point64> rays;
    rays.reserve(cell.size());
    for (int i : cell) rays.push_back(c.rays[static_cast<std::size_t>(i)]);
    for (auto& p : parallelepiped_points(rays)) cand.insert(std::move(p));
  }
  std::vector<Point64> cands(cand.begin(), cand.end());
  std::vector<Point64> basis;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& cdt : cands) {
      if (cdt == x) continue;
      Point64 rest = sub(x, cdt);
      if (is_zero(rest)) continue;
      if (c.contains(rest) && c.contains(cdt)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace latpoly
