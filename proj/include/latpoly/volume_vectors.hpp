#pragma once

// Volume vectors of corank-one point configurations.
//
// For d+2 points p_1..p_{d+2} spanning R^d the signed vector
//   w_i = (-1)^{i+1} det[(1 ... 1); (p_1 ... p̂_i ... p_{d+2})]
// sums to zero and encodes the unique affine dependence sum w_i p_i = 0.
// Its positive entries are the cell volumes of one of the two
// triangulations of the configuration, its negative entries (negated)
// those of the other.

#include "latpoly/polytope.hpp"

#include <functional>

namespace latpoly {

template <class T>
using VolumeVector = std::vector<T>;  // length d+2

template <class T>
VolumeVector<T> volume_vector(const std::vector<Point<T>>& pts) {
  const int d = static_cast<int>(pts[0].size());
  if (static_cast<int>(pts.size()) != d + 2)
    throw PreconditionViolated("volume_vector expects d+2 points");
  VolumeVector<T> w(static_cast<std::size_t>(d + 2));
  std::vector<Point<T>> sub;
  sub.reserve(static_cast<std::size_t>(d + 1));
  bool any = false;
  for (int skip = 0; skip < d + 2; ++skip) {
    sub.clear();
    for (int i = 0; i < d + 2; ++i)
      if (i != skip) sub.push_back(pts[static_cast<std::size_t>(i)]);
    T det = ones_bordered_det(sub);
    w[static_cast<std::size_t>(skip)] = (skip % 2 == 0) ? det : T(-det);
    if (det != 0) any = true;
  }
  if (!any) throw DegenerateConfiguration();
  return w;
}

template <class T>
struct CorankCell {
  std::vector<int> members;  // indices into the configuration, d+1 of them
  T volume;                  // normalized volume of the cell
};

template <class T>
struct CorankTriangulations {
  std::vector<CorankCell<T>> t_plus;
  std::vector<CorankCell<T>> t_minus;
};

// The two triangulations T± of a corank-one configuration: the
// full-dimensional cells of T± omit exactly one point of J±, and their
// volumes are the corresponding |w_i|.
template <class T>
CorankTriangulations<T> corank_one_triangulations(const std::vector<Point<T>>& pts) {
  VolumeVector<T> w = volume_vector(pts);
  CorankTriangulations<T> out;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (w[static_cast<std::size_t>(i)] == 0) continue;
    CorankCell<T> cell;
    for (int j = 0; j < n; ++j)
      if (j != i) cell.members.push_back(j);
    if (w[static_cast<std::size_t>(i)] > 0) {
      cell.volume = w[static_cast<std::size_t>(i)];
      out.t_plus.push_back(std::move(cell));
    } else {
      cell.volume = -w[static_cast<std::size_t>(i)];
      out.t_minus.push_back(std::move(cell));
    }
  }
  return out;
}

// All candidate volume vectors (w_1..w_{d+2}) with entries in [-bound,bound],
// positive part equal to minus the negative part and at most K, visited via
// a callback.  `last` fixes w_{d+2} when nonzero ordering matters upstream.
template <class T>
void for_each_volume_vector(int d, T k, T entry_bound, const std::function<void(const VolumeVector<T>&)>& fn) {
  VolumeVector<T> w(static_cast<std::size_t>(d + 2));
  T cap = std::min(k, entry_bound);
  auto rec = [&](auto&& self, int pos, T pos_sum, T neg_sum) -> void {
    if (pos == d + 2) {
      if (pos_sum >= 1 && pos_sum == -neg_sum) fn(w);
      return;
    }
    for (T v = -cap; v <= cap; ++v) {
      if (v > 0 && pos_sum + v > k) break;
      if (v < 0 && -(neg_sum + v) > k) continue;
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v > 0 ? T(pos_sum + v) : pos_sum, v < 0 ? T(neg_sum + v) : neg_sum);
    }
  };
  rec(rec, 0, T(0), T(0));
}

// The full candidate set W_K^d: balanced sums with positive part in [1, K].
template <class T>
std::vector<VolumeVector<T>> volume_vector_set(int d, T k) {
  std::vector<VolumeVector<T>> out;
  for_each_volume_vector<T>(d, k, k, [&](const VolumeVector<T>& w) { out.push_back(w); });
  return out;
}

// The vectors usable to grow a seed of volume `vol_s`: w_{d+2} = vol_s and,
// when the biggest-simplex pruning is on, all |w_i| <= vol_s.
template <class T>
std::vector<VolumeVector<T>> volume_vector_bucket(int d, T k, T vol_s, bool biggest_filter) {
  std::vector<VolumeVector<T>> out;
  if (vol_s < 1 || vol_s > k) return out;
  T bound = biggest_filter ? vol_s : k;
  VolumeVector<T> w(static_cast<std::size_t>(d + 2));
  w[static_cast<std::size_t>(d + 1)] = vol_s;
  auto rec = [&](auto&& self, int pos, T pos_sum, T neg_sum) -> void {
    if (pos == d + 1) {
      if (pos_sum == -neg_sum) out.push_back(w);
      return;
    }
    for (T v = -bound; v <= bound; ++v) {
      if (v > 0 && pos_sum + v > k) break;
      if (v < 0 && -(neg_sum + v) > k) continue;
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v > 0 ? T(pos_sum + v) : pos_sum, v < 0 ? T(neg_sum + v) : neg_sum);
    }
  };
  rec(rec, 0, vol_s, T(0));
  return out;
}

// The unique point p with volume vector ±w for the configuration
// (v_0, ..., v_d, p), given w_{d+2} = Vol(S):
//   p = -(sum_{i=0..d} w_{i+1} v_i) / Vol(S).
// Returns nullopt when p is not a lattice point.
template <class T>
std::optional<Point<T>> apex_point(const std::vector<Point<T>>& simplex_verts,
                                   const VolumeVector<T>& w, const T& vol_s) {
  const int d = static_cast<int>(simplex_verts[0].size());
  if (w[static_cast<std::size_t>(d + 1)] != vol_s)
    throw PreconditionViolated("w_{d+2} must equal Vol(S)");
  Point<T> p(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    T s(0);
    for (int i = 0; i <= d; ++i)
      s += w[static_cast<std::size_t>(i)] * simplex_verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    s = -s;
    if (s % vol_s != 0) return std::nullopt;
    p[static_cast<std::size_t>(j)] = s / vol_s;
  }
  return p;
}

}  // namespace latpoly
