#pragma once

// Canonical keys deciding unimodular equivalence.
//
// Two polytopes are unimodularly equivalent iff some bijection of their
// vertices is realized by an affine map with unimodular linear part.  The
// key minimizes, over admissible vertex orderings, the row-style Hermite
// normal form of the translated vertex-difference matrix; the row HNF is a
// complete invariant of the left GL_d(Z) action, so the minimum over an
// equivalence-invariant ordering set is a complete invariant of the
// polytope class.
//
// Admissible orderings are cut down combinatorially before any HNF is
// computed: the facet/vertex lattice-distance pairing matrix is
// canonicalized under independent row and column permutations (backtracking
// with row-sorting, the same scheme PALP-style normal forms use), and only
// the column orders realizing the canonical pairing matrix survive.  Their
// number is the order of the combinatorial automorphism group, which is
// tiny for all but the most symmetric polytopes.

#include "latpoly/polytope.hpp"

#include <sstream>
#include <unordered_set>

namespace latpoly {

struct CanonicalKey {
  std::string bytes;
  bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

// Lattice distance of every vertex from every facet.
template <class T>
Matrix<T> pairing_matrix(const Polytope<T>& p) {
  Matrix<T> m(static_cast<int>(p.facets.size()), p.num_vertices());
  for (int f = 0; f < m.rows; ++f)
    for (int v = 0; v < m.cols; ++v)
      m(f, v) = p.facets[static_cast<std::size_t>(f)].offset -
                dot(p.facets[static_cast<std::size_t>(f)].normal,
                    p.verts[static_cast<std::size_t>(v)]);
  return m;
}

namespace detail {

// All column orders bringing the pairing matrix to its canonical form
// (rows sorted ascending, flattened matrix lexicographically minimal,
// columns pre-partitioned by their sorted value multiset).
template <class T>
std::vector<std::vector<int>> canonical_column_orders(const Matrix<T>& a) {
  const int rows = a.rows, cols = a.cols;

  // Initial ordered partition by sorted column content.
  std::vector<std::pair<std::vector<T>, int>> colkey;
  colkey.reserve(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) {
    std::vector<T> k(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) k[static_cast<std::size_t>(r)] = a(r, c);
    std::sort(k.begin(), k.end());
    colkey.push_back({std::move(k), c});
  }
  std::sort(colkey.begin(), colkey.end());
  std::vector<std::vector<int>> blocks0;
  for (int c = 0; c < cols; ++c) {
    if (c == 0 || colkey[static_cast<std::size_t>(c)].first !=
                      colkey[static_cast<std::size_t>(c - 1)].first)
      blocks0.emplace_back();
    blocks0.back().push_back(colkey[static_cast<std::size_t>(c)].second);
  }

  std::set<std::vector<int>> result;
  std::unordered_set<std::size_t> visited;

  auto state_hash = [&](const std::vector<std::vector<int>>& blocks,
                        const std::vector<int>& rows_left) {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& b : blocks) {
      for (int c : b) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ULL;
      h = (h ^ 0xfeedULL) * 1099511628211ULL;
    }
    for (int r : rows_left) h = (h ^ static_cast<std::size_t>(r + 101)) * 1099511628211ULL;
    return h;
  };

  std::vector<T> bestkey, trykey;
  auto rec = [&](auto&& self, std::vector<std::vector<int>> blocks,
                 std::vector<int> rows_left) -> void {
    if (rows_left.empty()) {
      std::vector<int> order;
      order.reserve(static_cast<std::size_t>(cols));
      for (const auto& b : blocks) {
        // Distinct vertices have distinct pairing columns, so every block
        // refines to a singleton once all rows are used.
        if (b.size() != 1) throw PreconditionViolated("pairing matrix has equal columns");
        order.push_back(b[0]);
      }
      result.insert(std::move(order));
      return;
    }
    if (!visited.insert(state_hash(blocks, rows_left)).second) return;

    int bi = -1;
    bestkey.clear();
    std::vector<int> winners;
    for (int r : rows_left) {
      trykey.clear();
      for (const auto& b : blocks) {
        std::size_t start = trykey.size();
        for (int c : b) trykey.push_back(a(r, c));
        std::sort(trykey.begin() + static_cast<long>(start), trykey.end());
      }
      if (bi < 0 || trykey < bestkey) {
        bestkey = trykey;
        winners.clear();
        winners.push_back(r);
        bi = r;
      } else if (trykey == bestkey) {
        winners.push_back(r);
      }
    }
    for (int r : winners) {
      std::vector<std::vector<int>> nb;
      for (const auto& b : blocks) {
        std::vector<std::pair<T, int>> vals;
        vals.reserve(b.size());
        for (int c : b) vals.push_back({a(r, c), c});
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < vals.size(); ++i) {
          if (i == 0 || vals[i].first != vals[i - 1].first) nb.emplace_back();
          nb.back().push_back(vals[i].second);
        }
      }
      std::vector<int> rl;
      rl.reserve(rows_left.size() - 1);
      for (int x : rows_left)
        if (x != r) rl.push_back(x);
      self(self, std::move(nb), std::move(rl));
    }
  };

  std::vector<int> all_rows(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) all_rows[static_cast<std::size_t>(r)] = r;
  rec(rec, blocks0, all_rows);
  return {result.begin(), result.end()};
}

template <class T>
Matrix<T> ordered_diff_hnf(const Polytope<T>& p, const std::vector<int>& order) {
  const int d = p.dim;
  const int n = p.num_vertices();
  Matrix<T> b(d, n - 1);
  const Point<T>& base = p.verts[static_cast<std::size_t>(order[0])];
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < d; ++i)
      b(i, j - 1) = p.verts[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]
                           [static_cast<std::size_t>(i)] -
                    base[static_cast<std::size_t>(i)];
  return row_hnf(std::move(b)).h;
}

}  // namespace detail

// The canonical vertex matrix: lexicographically least (row-major) Hermite
// form over the admissible orderings.
template <class T>
Matrix<T> canonical_form(const Polytope<T>& p) {
  auto orders = detail::canonical_column_orders(pairing_matrix(p));
  Matrix<T> best;
  bool have = false;
  for (const auto& ord : orders) {
    Matrix<T> h = detail::ordered_diff_hnf(p, ord);
    if (!have || h.a < best.a) {
      best = std::move(h);
      have = true;
    }
  }
  if (!have) throw PreconditionViolated("polytope has no vertices");
  return best;
}

namespace detail {

template <class T>
CanonicalKey key_of_form(int dim, const T& vol, const Matrix<T>& h) {
  std::ostringstream os;
  os << dim << ';' << vol;
  for (const auto& v : h.a) os << ';' << v;
  return {os.str()};
}

template <class T>
std::vector<Point<T>> vertices_of_form(int dim, const Matrix<T>& h) {
  std::vector<Point<T>> vs;
  vs.reserve(static_cast<std::size_t>(h.cols) + 1);
  vs.emplace_back(static_cast<std::size_t>(dim), T(0));
  for (int j = 0; j < h.cols; ++j) {
    Point<T> v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = h(i, j);
    vs.push_back(std::move(v));
  }
  return vs;
}

}  // namespace detail

// Key serialization: dimension, volume, then the HNF entries (row-major),
// base-10, semicolon-separated.  Stable across versions.
template <class T>
CanonicalKey canonical_key(const Polytope<T>& p) {
  return detail::key_of_form(p.dim, p.vol, canonical_form(p));
}

// Key and canonical representative from one canonicalization pass.
template <class T>
std::pair<CanonicalKey, std::vector<Point<T>>> canonical_key_and_vertices(const Polytope<T>& p) {
  Matrix<T> h = canonical_form(p);
  return {detail::key_of_form(p.dim, p.vol, h), detail::vertices_of_form(p.dim, h)};
}

// A concrete representative with the canonical coordinates: the origin
// followed by the columns of the canonical form.
template <class T>
std::vector<Point<T>> canonical_vertices(const Polytope<T>& p) {
  return detail::vertices_of_form(p.dim, canonical_form(p));
}

template <class T>
struct UnimodularMap {
  Matrix<T> linear;      // |det| = 1
  Point<T> translation;
};

template <class T>
Polytope<T> apply_map(const Polytope<T>& p, const UnimodularMap<T>& m) {
  T d = det_checked(m.linear);
  if (d != 1 && d != -1) throw PreconditionViolated("map is not unimodular");
  return transform(p, m.linear, m.translation);
}

template <class T>
bool are_equivalent(const Polytope<T>& p, const Polytope<T>& q) {
  if (p.dim != q.dim || p.vol != q.vol || p.num_vertices() != q.num_vertices()) return false;
  return canonical_key(p) == canonical_key(q);
}

}  // namespace latpoly
