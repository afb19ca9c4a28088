#pragma once

// Dense integer matrices and the exact normal forms built on them:
// determinants (fraction-free Bareiss), rank, Hermite normal form under
// row operations, and Smith invariant factors.

#include "latpoly/core.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

namespace latpoly {

template <class T>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}

  T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = static_cast<U>(a[i]);
    return m;
  }
};

using IntMatrix = Matrix<Int>;
using Matrix64 = Matrix<i64>;

template <class T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y) {
  assert(x.cols == y.rows);
  Matrix<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

// ---------------------------------------------------------- determinants --

// Fraction-free Bareiss elimination; exact for any integral T.
template <class T>
T det_bareiss(Matrix<T> m) {
  assert(m.rows == m.cols);
  const int n = m.rows;
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return T(0);
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

// int64 fast path: Bareiss over __int128 with magnitude guards.  Returns
// nullopt when an intermediate leaves the safe range; caller falls back to
// the arbitrary-precision path.
inline std::optional<i64> det_i64_fast(const Matrix64& in) {
  const int n = in.rows;
  if (n > 10) return std::nullopt;
  i128 m[10][10];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = in(i, j);
  constexpr i128 LIMIT = (i128(1) << 100);
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return i64(0);
      for (int j = 0; j < n; ++j) std::swap(m[k][j], m[p][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        i128 t1 = m[i][j] * m[k][k];
        i128 t2 = m[i][k] * m[k][j];
        if (t1 > LIMIT || t1 < -LIMIT || t2 > LIMIT || t2 < -LIMIT) return std::nullopt;
        m[i][j] = (t1 - t2) / prev;
      }
    prev = m[k][k];
    if (prev > LIMIT || prev < -LIMIT) return std::nullopt;
  }
  i128 d = sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
  if (d > std::numeric_limits<i64>::max() || d < std::numeric_limits<i64>::min())
    return std::nullopt;
  return static_cast<i64>(d);
}

// Exact determinant of an int64 matrix, with transparent big-integer fallback.
inline Int det_exact(const Matrix64& m) {
  if (auto d = det_i64_fast(m)) return Int(*d);
  return det_bareiss(m.cast<Int>());
}

template <class T>
int rank_of(Matrix<T> m) {
  // Fraction-free elimination, row-echelon rank.
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      T g = gcd_of(m(r, c), m(i, c));
      T fr = m(i, c) / g, fi = m(r, c) / g;
      for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) * fi - m(r, j) * fr;
    }
    ++r;
  }
  return r;
}

// ------------------------------------------------------------------- HNF --

// Row-style Hermite normal form: H = U * M with U unimodular.  H is in row
// echelon form, pivots positive, and every entry above a pivot lies in
// [0, pivot).  For square nonsingular M this is the upper-triangular form
// with 0 <= h(i,j) < h(j,j) for i < j.
template <class T>
struct HnfResult {
  Matrix<T> h;
  Matrix<T> u;
};

template <class T>
bool abs_cmp_less(const T& x, const T& y) {
  T ax = x < 0 ? T(-x) : x;
  T ay = y < 0 ? T(-y) : y;
  return ax < ay;
}

template <class T>
HnfResult<T> row_hnf(Matrix<T> m) {
  const int rows = m.rows, cols = m.cols;
  Matrix<T> u = Matrix<T>::identity(rows);
  auto row_sub = [&](int dst, int src, const T& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) m(dst, j) -= q * m(src, j);
    for (int j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < cols; ++j) std::swap(m(x, j), m(y, j));
    for (int j = 0; j < rows; ++j) std::swap(u(x, j), u(y, j));
  };
  auto row_neg = [&](int x) {
    for (int j = 0; j < cols; ++j) m(x, j) = -m(x, j);
    for (int j = 0; j < rows; ++j) u(x, j) = -u(x, j);
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Gather the column gcd on row r.
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (m(i, c) != 0 && (p < 0 || abs_cmp_less(m(i, c), m(p, c)))) p = i;
      if (p < 0) break;          // column is zero below r
      row_swap(r, p);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        row_sub(i, r, floor_div(m(i, c), m(r, c)));
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;  // no pivot in this column
    if (m(r, c) < 0) row_neg(r);
    for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(m(i, c), m(r, c)));
    ++r;
  }
  return {std::move(m), std::move(u)};
}

// Public square-matrix HNF (errors on singular input).
inline HnfResult<Int> hnf(const IntMatrix& m) {
  if (m.rows != m.cols) throw PreconditionViolated("hnf expects a square matrix");
  if (det_bareiss(m) == 0) throw SingularMatrix();
  return row_hnf(m);
}

// ------------------------------------------------------------------- SNF --

// Smith invariant factors d_1 | d_2 | ... (nonnegative, zeros trailing).
inline std::vector<Int> snf_invariant_factors(IntMatrix m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<Int> d(static_cast<std::size_t>(n), Int(0));
  int t = 0;
  while (t < n) {
    // Find a nonzero pivot of minimal magnitude in the trailing block.
    int pr = -1, pc = -1;
    Int best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j)
        if (m(i, j) != 0) {
          Int v = m(i, j) < 0 ? Int(-m(i, j)) : m(i, j);
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
    if (pr < 0) break;  // trailing block is zero
    for (int j = 0; j < m.cols; ++j) std::swap(m(t, j), m(pr, j));
    for (int i = 0; i < m.rows; ++i) std::swap(m(i, t), m(i, pc));
    bool again = false;
    for (int i = t + 1; i < m.rows; ++i) {
      if (m(i, t) == 0) continue;
      Int q = floor_div(m(i, t), m(t, t));
      for (int j = t; j < m.cols; ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      if (m(t, j) == 0) continue;
      Int q = floor_div(m(t, j), m(t, t));
      for (int i = t; i < m.rows; ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) again = true;
    }
    if (again) continue;  // reduced remainders became new, smaller pivots
    // Pivot must divide the whole trailing block.
    bool divides = true;
    for (int i = t + 1; i < m.rows && divides; ++i)
      for (int j = t + 1; j < m.cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (int jj = t; jj < m.cols; ++jj) m(t, jj) += m(i, jj);
          divides = false;
        }
    if (!divides) continue;
    d[static_cast<std::size_t>(t)] = m(t, t) < 0 ? Int(-m(t, t)) : m(t, t);
    ++t;
  }
  return d;
}

}  // namespace latpoly
