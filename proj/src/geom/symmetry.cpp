#include "latcov/geom/symmetry.hpp"

#include <algorithm>

namespace latcov {

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm r;
  for (int i = 0; i < 3; ++i) {
    r.perm[i] = o.perm[perm[i]];
    r.sign[i] = sign[i] * o.sign[perm[i]];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  for (int i = 0; i < 3; ++i) {
    r.perm[perm[i]] = i;
    r.sign[perm[i]] = sign[i];
  }
  return r;
}

std::string SignedPerm::str() const {
  const char* names = "xyz";
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    if (sign[i] < 0) s += "-";
    s += names[perm[i]];
  }
  return s + ")";
}

const std::vector<SignedPerm>& octahedral_group() {
  static const std::vector<SignedPerm> group = [] {
    std::vector<SignedPerm> g;
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int m = 0; m < 8; ++m) {
        SignedPerm e;
        e.perm = p;
        for (int i = 0; i < 3; ++i) e.sign[i] = (m >> i) & 1 ? -1 : 1;
        g.push_back(e);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return g;
  }();
  return group;
}

std::vector<SignedPerm> z_rotations() {
  std::vector<SignedPerm> r{SignedPerm::identity()};
  for (int i = 1; i < 4; ++i) r.push_back(SignedPerm::rot_z() * r.back());
  return r;
}

}  // namespace latcov
