#pragma once

// Lattice points as exact integer coordinate vectors.

#include "latpoly/matrix.hpp"

#include <functional>

namespace latpoly {

template <class T>
using Point = std::vector<T>;

using Point64 = Point<i64>;
using PointZ = Point<Int>;

template <class T>
Point<T> sub(const Point<T>& a, const Point<T>& b) {
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
Point<T> add(const Point<T>& a, const Point<T>& b) {
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
Point<T> scale(const Point<T>& a, const T& s) {
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

template <class T>
T dot(const Point<T>& a, const Point<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
bool is_zero(const Point<T>& a) {
  for (const T& v : a)
    if (v != 0) return false;
  return true;
}

template <class T>
T content(const Point<T>& a) {
  T g(0);
  for (const T& v : a) g = gcd_of(g, v);
  return g;
}

// Divide a nonzero vector by the gcd of its entries.
template <class T>
Point<T> primitive(Point<T> a) {
  T g = content(a);
  if (g > 1)
    for (T& v : a) v /= g;
  return a;
}

inline Point64 to_p64(const PointZ& p) {
  Point64 r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = to_i64_checked(p[i]);
  return r;
}

inline PointZ to_pz(const Point64& p) {
  PointZ r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i];
  return r;
}

struct Point64Hash {
  std::size_t operator()(const Point64& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (i64 v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

struct PointListHash {
  std::size_t operator()(const std::vector<Point64>& ps) const {
    std::size_t h = 14695981039346656037ULL;
    Point64Hash ph;
    for (const auto& p : ps) h = (h ^ ph(p)) * 0x9e3779b97f4a7c15ULL;
    return h;
  }
};

// Unit vector e_i (0-based) in dimension d.
inline Point64 unit64(int d, int i, i64 c = 1) {
  Point64 p(static_cast<std::size_t>(d), 0);
  p[static_cast<std::size_t>(i)] = c;
  return p;
}

}  // namespace latpoly
