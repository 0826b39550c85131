#pragma once

#include <array>
#include <string>
#include <vector>

#include "latcov/geom/polytope.hpp"

namespace latcov {

/// Signed permutation x -> y with y[i] = sign[i] * x[perm[i]].
struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  static SignedPerm identity() { return {}; }
  /// Quarter turn about the z-axis: (x, y, z) -> (-y, x, z).
  static SignedPerm rot_z() { return {{1, 0, 2}, {-1, 1, 1}}; }
  static SignedPerm inversion() { return {{0, 1, 2}, {-1, -1, -1}}; }

  /// (this * o)(x) = this(o(x)).
  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool operator==(const SignedPerm&) const = default;

  template <class S>
  Vec3<S> apply(const Vec3<S>& x) const {
    Vec3<S> y;
    for (int i = 0; i < 3; ++i) y[i] = sign[i] < 0 ? S(-x[perm[i]]) : x[perm[i]];
    return y;
  }

  template <class S>
  Mat3<S> matrix() const {
    Mat3<S> m = Mat3<S>::Zero();
    for (int i = 0; i < 3; ++i) m(i, perm[i]) = S(sign[i]);
    return m;
  }

  std::string str() const;
};

/// All 48 signed permutations, identity first.
const std::vector<SignedPerm>& octahedral_group();

/// {id, r, r^2, r^3} for the quarter turn r about z.
std::vector<SignedPerm> z_rotations();

template <class S>
Polytope<S> apply_symmetry(const SignedPerm& g, const Polytope<S>& p) {
  return transform(p, g.template matrix<S>());
}

}  // namespace latcov
