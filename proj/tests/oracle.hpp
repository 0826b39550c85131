#pragma once

// Test-side oracles, written against plain rationals so they share no code
// path with the library kernels they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "latcov/arith/rational.hpp"
#include "latcov/geom/polytope.hpp"

namespace oracle {

using latcov::Rational;
using R3 = std::array<Rational, 3>;
using M3 = std::array<R3, 3>;

inline Rational q(long a, long b = 1) { return latcov::make_rational(a, b); }

inline R3 r3(const latcov::Vec3<Rational>& v) { return {v[0], v[1], v[2]}; }
inline latcov::Vec3<Rational> v3(const R3& a) { return latcov::vec3<Rational>(a[0], a[1], a[2]); }

inline Rational dot(const R3& a, const R3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

/// Cofactor expansion along the first row.
inline Rational det(const M3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Adjugate over determinant.
inline M3 inverse(const M3& m) {
  Rational d = det(m);
  M3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, e = (i + 2) % 3;
      r[i][j] = (m[a][c] * m[b][e] - m[a][e] * m[b][c]) / d;
    }
  return r;
}

inline M3 rows_of(const latcov::Mat3<Rational>& b) {
  M3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = b(i, j);
  return m;
}

inline Rational l1(const R3& x) { return abs(x[0]) + abs(x[1]) + abs(x[2]); }

/// Sign of n.x - offset for every halfspace, worst case first.
enum class Side { inside, boundary, outside };

inline Side side(const std::vector<latcov::HalfSpace<Rational>>& hs, const R3& x) {
  Side s = Side::inside;
  for (const auto& h : hs) {
    Rational v = dot(r3(h.normal), x) - h.offset;
    if (v > 0) return Side::outside;
    if (v == 0) s = Side::boundary;
  }
  return s;
}

/// Gauge from a facet list containing the origin in its interior:
/// max over facets of n.x / offset.
inline Rational gauge(const std::vector<latcov::HalfSpace<Rational>>& hs, const R3& x) {
  Rational g = 0;
  for (const auto& h : hs) g = std::max(g, dot(r3(h.normal), x) / h.offset);
  return g;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long num, long den) { return q(integer(-num, num), integer(1, den)); }
  R3 point(long num, long den) { return {rational(num, den), rational(num, den), rational(num, den)}; }
  /// Uniform-ish point of the box [-w, w]^3 on a fine grid.
  R3 grid(const Rational& w, long steps) {
    R3 x;
    for (auto& c : x) c = w * q(integer(-steps, steps), steps);
    return x;
  }
};

}  // namespace oracle
