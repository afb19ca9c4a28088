#pragma once

// Ehrhart counting: h*-vectors, the interpolated Ehrhart polynomial, the
// parametric simplex families with known closed-form h*-vectors, and the
// h*-inequality checkers.

#include "latpoly/canonical.hpp"

#include <array>

namespace latpoly {

// |tP ∩ Z^d| for t = 0..upto.
template <class T>
std::vector<Int> dilation_counts(const Polytope<T>& p, int upto) {
  std::vector<Int> c(static_cast<std::size_t>(upto) + 1);
  c[0] = 1;
  for (int t = 1; t <= upto; ++t)
    c[static_cast<std::size_t>(t)] = dilate(p, T(t)).count_points(false);
  return c;
}

struct HStarVector {
  std::vector<Int> h;  // h*_0 .. h*_d
  int degree = 0;      // largest index with h*_s > 0

  bool operator==(const HStarVector& o) const { return h == o.h; }
};

inline HStarVector hstar_of(std::vector<Int> h) {
  HStarVector v;
  v.h = std::move(h);
  v.degree = 0;
  for (std::size_t i = 0; i < v.h.size(); ++i)
    if (v.h[i] > 0) v.degree = static_cast<int>(i);
  return v;
}

// h*_j = sum_{i=0..j} (-1)^i binom(d+1, i) ehr(j-i); the four basic
// identities (h*_0 = 1, h*_1 = |P|-d-1, h*_d = |P°|, sum = Vol) are
// asserted on every call.
template <class T>
HStarVector h_star(const Polytope<T>& p) {
  const int d = p.dim;
  auto ehr = dilation_counts(p, d);
  std::vector<Int> h(static_cast<std::size_t>(d) + 1, Int(0));
  for (int j = 0; j <= d; ++j) {
    Int s(0);
    for (int i = 0; i <= j; ++i) {
      Int term = binomial(d + 1, i) * ehr[static_cast<std::size_t>(j - i)];
      if (i % 2 == 1) term = -term;
      s += term;
    }
    if (s < 0) throw NegativeCoefficient();
    h[static_cast<std::size_t>(j)] = s;
  }
  Int total(0);
  for (const auto& v : h) total += v;
  Int interior = p.count_points(true);
  if (h[0] != 1 || h[1] != ehr[1] - d - 1 || h[static_cast<std::size_t>(d)] != interior ||
      total != Int(p.vol))
    throw PreconditionViolated("h* consistency check failed");
  return hstar_of(std::move(h));
}

struct EhrhartPolynomial {
  std::vector<Rational> coeff;  // coeff[i] multiplies t^i, degree d

  Rational operator()(const Int& t) const {
    Rational v(0);
    Rational tp(1);
    for (const auto& c : coeff) {
      v += c * tp;
      tp *= Rational(t);
    }
    return v;
  }
};

// Lagrange interpolation through (t, |tP ∩ Z^d|), t = 0..d.
template <class T>
EhrhartPolynomial ehrhart_polynomial(const Polytope<T>& p) {
  const int d = p.dim;
  auto vals = dilation_counts(p, d);
  std::vector<Rational> coeff(static_cast<std::size_t>(d) + 1, Rational(0));
  std::vector<Rational> basis;
  for (int i = 0; i <= d; ++i) {
    // L_i(t) = prod_{j != i} (t - j)/(i - j)
    basis.assign(1, Rational(1));
    Int denom(1);
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis.push_back(0);
      for (std::size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - Rational(j) * basis[k];
      basis[0] = -Rational(j) * basis[0];
      denom *= (i - j);
    }
    Rational scale = Rational(vals[static_cast<std::size_t>(i)]) / Rational(denom);
    for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += basis[k] * scale;
  }
  // leading coefficient is Vol/d!
  Int fact(1);
  for (int i = 2; i <= d; ++i) fact *= i;
  if (coeff[static_cast<std::size_t>(d)] != Rational(Int(p.vol), fact))
    throw PreconditionViolated("ehrhart leading coefficient mismatch");
  if (coeff[0] != Rational(1)) throw PreconditionViolated("ehrhart constant term mismatch");
  return {std::move(coeff)};
}

// ---------------------------------------------------------------- families --

// Sylvester sequence 2, 3, 7, 43, 1807, ...
inline std::vector<Int> sylvester_sequence(int n) {
  std::vector<Int> s;
  Int prod(1);
  for (int i = 0; i < n; ++i) {
    s.push_back(prod + 1);
    prod *= s.back();
  }
  return s;
}

// S^d_k = conv(0, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d - 1) e_d).
inline Polytope64 zpw_simplex(int d, i64 k) {
  if (d < 2 || k < 1) throw PreconditionViolated("zpw_simplex needs d >= 2, k >= 1");
  auto s = sylvester_sequence(d);
  std::vector<Point64> pts{Point64(static_cast<std::size_t>(d), 0)};
  for (int i = 0; i < d - 1; ++i)
    pts.push_back(unit64(d, i, to_i64_checked(s[static_cast<std::size_t>(i)])));
  pts.push_back(unit64(d, d - 1, to_i64_checked(Int(k + 1) * (s[static_cast<std::size_t>(d - 1)] - 1))));
  return make_simplex(pts);
}

// D^3_k = conv(0, e1, e2, (3, 6k+1, 12k+8)); volume 12k+8, clean, k interior.
inline Polytope64 duong_simplex(i64 k) {
  if (k < 1) throw PreconditionViolated("duong_simplex needs k >= 1");
  return make_simplex<i64>(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 6 * k + 1, 12 * k + 8}});
}

// ---------------------------------------------------------------- checkers --

// Two-dimensional h*-characterization: h*_2 = 0, or
// 0 < h*_2 <= h*_1 <= 3 h*_2 + 3, or the exceptional (1,7,1).
inline bool check_scott(const std::vector<Int>& h) {
  if (h.size() != 3 || h[0] != 1) throw PreconditionViolated("expects (1, h1, h2)");
  if (h[2] == 0) return true;
  if (h[2] <= h[1] && h[1] <= 3 * h[2] + 3) return true;
  return h[1] == 7 && h[2] == 1;
}

// Hollow three-dimensional case: (1, h1, h2, 0) is realizable iff h2 = 0,
// or 0 <= h1 <= 3 h2 + 3, or (1,7,1,0).
inline bool check_hollow_3d(const std::vector<Int>& h) {
  if (h.size() != 4 || h[0] != 1 || h[3] != 0)
    throw PreconditionViolated("expects (1, h1, h2, 0)");
  if (h[2] == 0) return true;
  if (h[1] >= 0 && h[1] <= 3 * h[2] + 3) return true;
  return h[1] == 7 && h[2] == 1;
}

struct ConjMainReport {
  bool i1 = false;       // h3 <= h1
  bool i2 = false;       // h1 <= h2
  bool i3 = false;       // h2 <= 19 h3 + 16
  bool i4 = false;       // h2 - h1 <= 9 h3 + 9
  bool i5 = false;       // 5 h3 h1 + 4 h1 + 4 <= 4 h3^2 + 4 h3 h2 + 5 h2
  bool i4star = false;   // h2 - h1 <= 9 h3 + 7

  bool main_five() const { return i1 && i2 && i3 && i4 && i5; }
};

inline ConjMainReport check_conj_main(const std::vector<Int>& h) {
  if (h.size() != 4 || h[0] != 1 || h[3] < 1)
    throw PreconditionViolated("expects (1, h1, h2, h3) with h3 >= 1");
  const Int &h1 = h[1], &h2 = h[2], &h3 = h[3];
  ConjMainReport r;
  r.i1 = h3 <= h1;
  r.i2 = h1 <= h2;
  r.i3 = h2 <= 19 * h3 + 16;
  r.i4 = h2 - h1 <= 9 * h3 + 9;
  r.i5 = 5 * h3 * h1 + 4 * h1 + 4 <= 4 * h3 * h3 + 4 * h3 * h2 + 5 * h2;
  r.i4star = h2 - h1 <= 9 * h3 + 7;
  return r;
}

struct HStarWitness {
  Polytope64 poly;
  std::vector<Int> expected_h;  // asserted against h_star(poly)
};

namespace detail {

inline HStarWitness witness(std::vector<Point64> pts, std::vector<Int> h) {
  HStarWitness w{convex_hull(pts), std::move(h)};
  if (h_star(w.poly).h != w.expected_h)
    throw PreconditionViolated("family witness has unexpected h*");
  return w;
}

}  // namespace detail

// The exceptional polytopes of the strengthened inequality (4*): ten
// sporadic ones and two k-parametric families, each with its h*-vector.
inline std::vector<HStarWitness> conj_main_exceptions(i64 k_max) {
  if (k_max < 1) throw PreconditionViolated("k_max >= 1");
  std::vector<HStarWitness> out;
  auto add = [&](std::vector<Point64> pts, std::vector<Int> h) {
    out.push_back(detail::witness(std::move(pts), std::move(h)));
  };
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 19, 25}}, {1, 3, 20, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 19, 28}}, {1, 4, 22, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 13, 19}, {1, -2, -3}}, {1, 5, 22, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {4, 7, 11}, {-5, -7, -15}}, {1, 7, 24, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 2, 3}, {-21, -8, -25}}, {1, 11, 28, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 17, 42}}, {1, 11, 29, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 7, 17}, {1, -2, -5}}, {1, 12, 29, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {7, 2, 9}, {-7, -3, -15}}, {1, 13, 30, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 42, -25}}, {1, 14, 31, 1});
  add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 23, 45}}, {1, 8, 34, 2});
  for (i64 k = 1; k <= k_max; ++k) {
    add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3 * k + 3, 9 * k + 8, 18 * k + 15}},
        {1, 4 * k + 3, 13 * k + 11, k});
    add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 12 * k + 8, 18 * k + 15}},
        {1, 4 * k + 3, 13 * k + 11, k});
  }
  return out;
}

// Vertices of the pentagon cut out by (1),(2),(3),(4*),(5) at fixed h3 > 1.
inline std::array<std::array<Int, 4>, 5> pentagon_vertices(const Int& h3) {
  if (h3 < 2) throw PreconditionViolated("pentagon needs h3 >= 2");
  return {{{Int(1), h3, h3, h3},
           {Int(1), 4 * h3 + 4, 4 * h3 + 4, h3},
           {Int(1), 16 * h3 + 19, 19 * h3 + 16, h3},
           {Int(1), 10 * h3 + 9, 19 * h3 + 16, h3},
           {Int(1), h3, 10 * h3 + 7, h3}}};
}

// Realizing polytopes for the pentagon vertices v1, v2, v3, v5 (v4 has no
// known witness; see v4_neighbors).
inline std::vector<std::pair<int, HStarWitness>> pentagon_witnesses(i64 h3) {
  if (h3 < 2) throw PreconditionViolated("pentagon needs h3 >= 2");
  std::vector<std::pair<int, HStarWitness>> out;
  out.emplace_back(1, detail::witness({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 3 * h3, 3 * h3 + 1}},
                                      {1, h3, h3, h3}));
  out.emplace_back(2, detail::witness({{0, 0, 0}, {1, 0, 0}, {2, 3, 0}, {2, 3, 3 + 3 * h3}},
                                      {1, 4 * h3 + 4, 4 * h3 + 4, h3}));
  out.emplace_back(3, HStarWitness{zpw_simplex(3, h3),
                                   {1, 16 * h3 + 19, 19 * h3 + 16, h3}});
  out.emplace_back(5, HStarWitness{duong_simplex(h3), {1, h3, 10 * h3 + 7, h3}});
  for (auto& [which, w] : out)
    if (h_star(w.poly).h != w.expected_h)
      throw PreconditionViolated("pentagon witness has unexpected h*");
  return out;
}

// The three polytopes whose h*-vectors flank the unrealized vertex v4.
inline std::vector<HStarWitness> v4_neighbors(i64 h3) {
  if (h3 < 1) throw PreconditionViolated("v4_neighbors needs h3 >= 1");
  std::vector<HStarWitness> out;
  out.push_back(detail::witness({{1, 0, 0},
                                 {2, 0, 0},
                                 {0, 1, 0},
                                 {0, 3, 0},
                                 {0, 0, 6 * h3 + 5},
                                 {1, 0, 3 * h3 + 3}},
                                {1, 10 * h3 + 11, 19 * h3 + 16, h3}));
  out.push_back(detail::witness({{0, 0, 0},
                                 {1, 0, 0},
                                 {0, 1, 0},
                                 {9 * h3 + 8, 6 * h3 + 5, 18 * h3 + 15},
                                 {12 * h3 + 10, 8 * h3 + 7, 24 * h3 + 20}},
                                {1, 10 * h3 + 9, 19 * h3 + 15, h3}));
  out.push_back(detail::witness({{0, 0, 0},
                                 {1, 0, 0},
                                 {0, 1, 0},
                                 {6 * h3 + 5, 3 * h3 + 3, 18 * h3 + 15},
                                 {8 * h3 + 5, 4 * h3 + 3, 24 * h3 + 14}},
                                {1, 10 * h3 + 7, 19 * h3 + 14, h3}));
  return out;
}

// Stanley/Hibi inequality families for an h*-vector of degree s:
//   (1) h*_d <= h*_1
//   (2) h*_{d-1} + ... + h*_{d-i} <= h*_2 + ... + h*_{i+1},  1 <= i <= floor((d-1)/2)
//   (3) h*_0 + ... + h*_i <= h*_s + ... + h*_{s-i},          0 <= i <= floor(s/2)
//   (4) if h*_d > 0:  h*_1 <= h*_i for i = 1..d-1
struct StanleyHibiReport {
  bool f1 = false, f2 = false, f3 = false, f4 = false;
  bool all() const { return f1 && f2 && f3 && f4; }
};

inline StanleyHibiReport check_stanley_hibi(const HStarVector& hs) {
  const auto& h = hs.h;
  const int d = static_cast<int>(h.size()) - 1;
  const int s = hs.degree;
  StanleyHibiReport r;
  r.f1 = h[static_cast<std::size_t>(d)] <= h[1];
  r.f2 = true;
  for (int i = 1; i <= (d - 1) / 2; ++i) {
    Int lhs(0), rhs(0);
    for (int j = d - i; j <= d - 1; ++j) lhs += h[static_cast<std::size_t>(j)];
    for (int j = 2; j <= i + 1; ++j) rhs += h[static_cast<std::size_t>(j)];
    if (lhs > rhs) r.f2 = false;
  }
  r.f3 = true;
  for (int i = 0; i <= s / 2; ++i) {
    Int lhs(0), rhs(0);
    for (int j = 0; j <= i; ++j) lhs += h[static_cast<std::size_t>(j)];
    for (int j = s - i; j <= s; ++j) rhs += h[static_cast<std::size_t>(j)];
    if (lhs > rhs) r.f3 = false;
  }
  r.f4 = true;
  if (h[static_cast<std::size_t>(d)] > 0)
    for (int i = 1; i <= d - 1; ++i)
      if (h[1] > h[static_cast<std::size_t>(i)]) r.f4 = false;
  return r;
}

template <class Seq>
bool log_concave(const Seq& a) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i - 1] * a[i + 1] > a[i] * a[i]) return false;
  return true;
}

template <class Seq>
bool unimodal(const Seq& a) {
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  return i == a.size();
}

}  // namespace latpoly
