#pragma once

// Exact integer primitives shared by the whole library.
//
// All geometry is carried out in exact integer (or rational) arithmetic.
// `Int` is an arbitrary-precision integer; hot kernels work on int64
// coordinates and fall back to `Int` when a checked operation would
// overflow.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;
using i64 = std::int64_t;
using i128 = __int128;

// ---------------------------------------------------------------- errors --

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};
struct NotFullDimensional : std::runtime_error {
  NotFullDimensional() : std::runtime_error("point set is not full-dimensional") {}
};
struct DegenerateConfiguration : std::runtime_error {
  DegenerateConfiguration() : std::runtime_error("degenerate point configuration") {}
};
struct ZeroVolume : std::runtime_error {
  ZeroVolume() : std::runtime_error("all heights are zero") {}
};
struct NotPointed : std::runtime_error {
  NotPointed() : std::runtime_error("cone is not pointed") {}
};
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};
struct FormatError : std::runtime_error {
  explicit FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};
struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("int64 coordinate overflow") {}
};
struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};
struct NegativeCoefficient : std::runtime_error {
  NegativeCoefficient() : std::runtime_error("negative h* coefficient (internal bug)") {}
};

// --------------------------------------------------------------- helpers --

template <class T>
T gcd_of(const T& a, const T& b) {
  T x = a < 0 ? T(-a) : a;
  T y = b < 0 ? T(-b) : b;
  while (y != 0) {
    T r = x % y;
    x = y;
    y = r;
  }
  return x;
}

// Floor division (round toward -infinity), valid for negative numerators.
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class T>
T ceil_div(const T& a, const T& b) {
  return -floor_div(T(-a), b);
}

inline i64 to_i64_checked(const Int& v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw OverflowError();
  return static_cast<i64>(v);
}

inline bool add_overflows(i64 a, i64 b, i64& out) { return __builtin_add_overflow(a, b, &out); }
inline bool mul_overflows(i64 a, i64 b, i64& out) { return __builtin_mul_overflow(a, b, &out); }

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace latpoly
