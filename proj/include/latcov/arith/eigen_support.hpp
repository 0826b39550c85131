#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>
#include <Eigen/Geometry>

#include "latcov/arith/interval.hpp"
#include "latcov/arith/quadratic.hpp"
#include "latcov/arith/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<latcov::Quadratic> : GenericNumTraits<latcov::Quadratic> {
  using Real = latcov::Quadratic;
  using NonInteger = latcov::Quadratic;
  using Literal = latcov::Quadratic;
  using Nested = latcov::Quadratic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<latcov::Interval> : GenericNumTraits<latcov::Interval> {
  using Real = latcov::Interval;
  using NonInteger = latcov::Interval;
  using Literal = latcov::Interval;
  using Nested = latcov::Interval;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace latcov {

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;

using Vec3q = Vec3<Rational>;

template <class S>
Vec3<S> vec3(const S& x, const S& y, const S& z) {
  Vec3<S> v;
  v << x, y, z;
  return v;
}

/// Exact 3x3 determinant by cofactor expansion.
template <class S>
S det3(const Mat3<S>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Exact inverse through the adjugate; requires det != 0.
template <class S>
Mat3<S> inverse3(const Mat3<S>& m) {
  S det = det3(m);
  Mat3<S> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return adj / det;
}

inline bool lex_less(const Vec3q& a, const Vec3q& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

template <class S>
bool lex_less(const Vec3<S>& a, const Vec3<S>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace latcov
