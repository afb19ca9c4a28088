#pragma once

// Constructions used by the enumeration and its extremal-case analysis:
// lattice pyramids, Lawrence prisms, and the exceptional simplices.

#include "latpoly/polytope.hpp"

namespace latpoly {

// Pyr(P) = conv(P x {0}, e_{d+1}); preserves normalized volume and adds
// exactly one lattice point.
template <class T>
Polytope<T> lattice_pyramid(const Polytope<T>& p) {
  std::vector<Point<T>> pts;
  pts.reserve(p.verts.size() + 1);
  for (const auto& v : p.verts) {
    Point<T> w = v;
    w.push_back(T(0));
    pts.push_back(std::move(w));
  }
  Point<T> apex(static_cast<std::size_t>(p.dim + 1), T(0));
  apex.back() = T(1);
  pts.push_back(std::move(apex));
  return convex_hull(pts);
}

// Lawrence prism with heights a_0..a_{d-1}:
// conv(0, a_0 e_d, e_1, e_1 + a_1 e_d, ..., e_{d-1}, e_{d-1} + a_{d-1} e_d).
// Vol = sum a_i; |P cap Z^d| = d + Vol (the Blichfeldt equality case).
inline Polytope64 lawrence_prism(const std::vector<i64>& heights) {
  const int d = static_cast<int>(heights.size());
  bool positive = false;
  for (i64 a : heights) {
    if (a < 0) throw PreconditionViolated("heights must be nonnegative");
    if (a > 0) positive = true;
  }
  if (!positive) throw ZeroVolume();
  std::vector<Point64> pts;
  for (int i = 0; i < d; ++i) {
    Point64 base(static_cast<std::size_t>(d), 0);
    if (i > 0) base[static_cast<std::size_t>(i - 1)] = 1;
    pts.push_back(base);
    if (heights[static_cast<std::size_t>(i)] > 0) {
      base[static_cast<std::size_t>(d - 1)] += heights[static_cast<std::size_t>(i)];
      pts.push_back(base);
    }
  }
  return convex_hull(pts);
}

// (d-2)-fold lattice pyramid over the second dilation of the unimodular
// triangle; volume 4, d+4 lattice points.
inline Polytope64 exceptional_simplex(int d) {
  if (d < 2) throw PreconditionViolated("exceptional simplices need d >= 2");
  Polytope64 p = convex_hull<i64>({{0, 0}, {2, 0}, {0, 2}});
  for (int i = 2; i < d; ++i) p = lattice_pyramid(p);
  return p;
}

}  // namespace latpoly
