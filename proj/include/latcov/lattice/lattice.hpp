#pragma once

#include <array>
#include <string>
#include <vector>

#include "latcov/geom/polytope.hpp"

namespace latcov {

using Coeffs = std::array<long, 3>;

/// Lattice spanned by the rows a1, a2, a3 of `basis`.
template <class S>
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(Mat3<S> basis, std::string name = "");

  const Mat3<S>& basis() const { return basis_; }
  const S& det() const { return det_; }
  const std::string& name() const { return name_; }
  Vec3<S> row(int i) const { return basis_.row(i).transpose(); }

  Vec3<S> point(const Coeffs& c) const;
  /// Real coordinates of x in the basis (x = sum c_i a_i).
  Vec3<S> coords(const Vec3<S>& x) const { return inv_t_ * x; }

  Lattice scaled(const S& s) const { return Lattice(basis_ * s, name_); }

 private:
  Mat3<S> basis_ = Mat3<S>::Identity();
  Mat3<S> inv_t_ = Mat3<S>::Identity();  // inverse of basis^T
  S det_ = S(1);
  std::string name_;
};

template <class S>
struct LatticePoint {
  Coeffs coeffs;
  Vec3<S> x;
};

/// Lattice points inside the closed box, in lexicographic coefficient order.
template <class S>
std::vector<LatticePoint<S>> enumerate_points(const Lattice<S>& l, const Box3<S>& box);

template <class S>
Box3<S> scaled_box(const Box3<S>& b, const S& s);

template <class S>
struct PackingCertificate {
  bool ok = false;
  LatticePoint<S> witness;
  S min_gauge;
  S search_radius;  // every lattice vector of gauge <= search_radius was examined
  std::size_t examined = 0;
};

/// Minimal gauge over nonzero lattice vectors; ok iff it is at least 2.
template <class S>
PackingCertificate<S> check_packing(const Polytope<S>& c, const Lattice<S>& l);

template <class S>
struct CoverCertificate {
  std::string method;  // "zong" or "fundamental"
  S radius;
  Mat3<S> basis;       // basis the region was built from
  Polytope<S> region;
  std::vector<LatticePoint<S>> translates;
  Box3<S> translate_box;  // fundamental: all translates with coefficients here were used
  CellComplex<S> residual;

  bool covered() const { return residual.empty(); }
};

template <class S>
CoverCertificate<S> zong_cover_check(const Polytope<S>& c, const Lattice<S>& l, const S& r);

/// Zong check over the 48 signed row reorderings of the basis, stopping at
/// the first that covers; the given order is tried first. Translate
/// coefficients stay in the original basis.
template <class S>
CoverCertificate<S> zong_cover_search(const Polytope<S>& c, const Lattice<S>& l, const S& r,
                                      int* tried = nullptr);

template <class S>
CoverCertificate<S> fundamental_cover_check(const Polytope<S>& c, const Lattice<S>& l,
                                            const S& r);

/// Fundamental parallelepiped {sum t_i a_i : t in [0,1]^3}.
template <class S>
Polytope<S> fundamental_cell(const Lattice<S>& l);

/// Exact min over all lattice points of gauge(c, x - lambda), with the minimizer.
template <class S>
std::pair<S, LatticePoint<S>> nearest_gauge(const Polytope<S>& c, const Lattice<S>& l,
                                            const Vec3<S>& x);

}  // namespace latcov
