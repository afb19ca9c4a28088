#pragma once

// Published reference counts used by `verify` and the acceptance suite:
// per-volume class totals with the spanning / very ample / IDP /
// unimodular cover / unimodular triangulation columns, smooth counts, and
// the named small smooth polytopes.  -1 marks a blank (not computed) cell.

#include "latpoly/point.hpp"

#include <array>

namespace latpoly::fixtures {

struct TableRow {
  long long volume, tot, sp, va, idp, uc, ut;
};

inline const std::vector<TableRow>& volume_table(int dim) {
  static const std::vector<TableRow> d3 = {
      {1, 1, 1, 1, 1, 1, 1},
      {2, 3, 2, 2, 2, 2, 2},
      {3, 6, 5, 5, 5, 5, 5},
      {4, 17, 15, 14, 14, 14, 14},
      {5, 19, 17, 15, 15, 15, 15},
      {6, 54, 51, 43, 43, 43, 43},
      {7, 59, 57, 47, 47, 47, 47},
      {8, 154, 147, 125, 125, 125, 125},
      {9, 181, 177, 135, 135, 135, 135},
      {10, 368, 363, 291, 290, 290, 290},
      {11, 414, 411, 324, 323, 323, 323},
      {12, 961, 951, 748, 746, 746, 745},
  };
  static const std::vector<TableRow> d4 = {
      {1, 1, 1, 1, 1, 1, 1},   {2, 3, 2, 2, 2, 2, 2},       {3, 8, 6, 6, 6, 6, 6},
      {4, 28, 21, 19, 19, 19, 19}, {5, 31, 27, 21, 21, 21, 21}, {6, 109, 91, 71, 71, 71, 71},
  };
  static const std::vector<TableRow> d5 = {
      {1, 1, 1, 1, 1, 1, 1},
      {2, 4, 2, 2, 2, 2, 2},
      {3, 10, 6, 6, 6, 6, 6},
      {4, 38, 23, 21, 21, 21, 21},
  };
  static const std::vector<TableRow> d6 = {
      {1, 1, 1, 1, 1, 1, 1},
      {2, 4, 2, 2, 2, 2, 2},
      {3, 11, 6, 6, 6, 6, 6},
      {4, 48, 24, 22, 22, 22, 22},
      {5, 51, 36, 27, 27, 27, 27},
  };
  static const std::vector<TableRow> none = {};
  switch (dim) {
    case 3: return d3;
    case 4: return d4;
    case 5: return d5;
    case 6: return d6;
    default: return none;
  }
}

// Smooth class counts by volume.
inline const std::vector<long long>& smooth_counts(int dim) {
  static const std::vector<long long> d2 = {1, 1, 1, 3, 2, 4, 4, 6, 5, 7};
  static const std::vector<long long> d3 = {1, 0, 1, 1, 2, 4, 5, 6, 8, 8, 10, 16};
  static const std::vector<long long> d4 = {1, 0, 0, 1, 1, 3};
  static const std::vector<long long> d5 = {1, 0, 0, 0, 1, 1, 2, 3, 5, 8};
  static const std::vector<long long> d6 = {1, 0, 0, 0, 0};
  static const std::vector<long long> none = {};
  switch (dim) {
    case 2: return d2;
    case 3: return d3;
    case 4: return d4;
    case 5: return d5;
    case 6: return d6;
    default: return none;
  }
}

// Three-dimensional simplices with exactly one interior lattice point.
inline constexpr long long kSimplices3dOneInterior = 225;
inline constexpr long long kOneInteriorVolumeCap = 85;
inline constexpr long long kOneInteriorMaxVolume = 72;
inline constexpr long long kCleanOneInteriorMaxVolume = 20;

// The fourteen smooth polytopes of normalized volume at most 10 that are
// not Lawrence prisms.
inline std::vector<std::vector<Point64>> small_smooth_polytopes() {
  using P = Point64;
  return {
      /* 2.a */ {P{0, 0}, P{2, 0}, P{0, 2}},
      /* 2.b */ {P{0, 0}, P{3, 0}, P{0, 3}},
      /* 2.c */ {P{0, 0}, P{2, 0}, P{0, 2}, P{2, 2}},
      /* 2.d */ {P{0, 0}, P{1, 0}, P{0, 1}, P{-2, 2}, P{-4, 2}},
      /* 2.e */ {P{0, 0}, P{1, 0}, P{0, 1}, P{3, 2}, P{2, 3}, P{3, 3}},
      /* 2.f */ {P{0, 0}, P{1, 0}, P{0, 1}, P{2, 1}, P{1, 2}, P{2, 2}},
      /* 2.g */ {P{0, 0}, P{1, 0}, P{0, 1}, P{3, 1}, P{1, 2}, P{4, 2}},
      /* 2.h */ {P{0, 0}, P{1, 0}, P{1, 2}, P{-2, 2}},
      /* 3.a */ {P{0, 0, 0}, P{2, 0, 0}, P{0, 2, 0}, P{0, 0, 2}},
      /* 3.b */ {P{0, 0, 0}, P{1, 0, 0}, P{0, 1, 0}, P{1, 1, 0}, P{0, 0, 1}, P{1, 0, 1},
                 P{0, -2, 1}, P{1, -2, 1}},
      /* 3.c */ {P{0, 0, 0}, P{1, 0, 0}, P{0, 1, 0}, P{0, 0, 1}, P{0, -2, 1}, P{2, -2, 1}},
      /* 3.d */ {P{0, 0, 0}, P{1, 0, 0}, P{0, 1, 0}, P{1, 1, 0}, P{0, 0, 1}, P{1, 0, 1},
                 P{0, 1, 1}, P{1, 1, 1}},
      /* 4.a */ {P{0, 0, 0, 0}, P{1, 0, 0, 0}, P{0, 1, 0, 0}, P{0, 0, 1, 0}, P{0, 0, 0, 1},
                 P{1, 0, 1, 0}, P{1, 0, 0, 1}, P{0, 1, 1, 0}, P{0, 1, 0, 1}},
      /* 5.a */ {P{0, 0, 0, 0, 0}, P{1, 0, 0, 0, 0}, P{0, 1, 0, 0, 0}, P{0, 0, 1, 0, 0},
                 P{0, 0, 0, 1, 0}, P{0, 0, 0, 0, 1}, P{1, 0, 0, 1, 0}, P{1, 0, 0, 0, 1},
                 P{0, 1, 0, 1, 0}, P{0, 1, 0, 0, 1}, P{0, 0, 1, 1, 0}, P{0, 0, 1, 0, 1}},
  };
}

// The three minimal separating examples: spanning but not very ample,
// very ample but not IDP, unimodular cover but no unimodular triangulation.
inline std::vector<Point64> spanning_not_va_example() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}};
}
inline std::vector<Point64> va_not_idp_example() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}, {1, 1, 3}, {1, 0, -1}, {0, 1, -1}, {0, 0, 1}};
}
inline std::vector<Point64> uc_not_ut_example() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1},
          {1, 2, -1}, {3, 1, -1}, {-2, -1, 1}};
}

// The second volume-72 simplex with one interior point besides the ZPW one.
inline std::vector<Point64> other_volume72_simplex() {
  return {{0, 0, 0}, {2, 0, 0}, {0, 6, 0}, {0, 0, 6}};
}

}  // namespace latpoly::fixtures
