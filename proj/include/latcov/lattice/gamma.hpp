#pragma once

#include <string>
#include <vector>

#include "latcov/lattice/lattice.hpp"

namespace latcov {

/// Certified enclosure lower <= gamma(C, L) <= upper.
template <class S>
struct GammaBracket {
  S lower, upper;
  CoverCertificate<S> upper_cover;
  Vec3<S> witness;                          // f(witness) = lower
  std::vector<LatticePoint<S>> neighbors;   // every lambda with gauge(witness - lambda) <= lower
  Box3<S> neighbor_box;                     // ... lies in this box, all of whose points are listed
  int cover_tests = 0;

  bool exact() const { return lower == upper; }
};

/// Covering radius of C + L. Alternates exact deep-hole candidates
/// (residual cells of failed covers, deepest points by LP) with bisection.
template <class S>
GammaBracket<S> gamma_bracket(const Polytope<S>& c, const Lattice<S>& l, const S& tol);

/// max t over x in cell with t <= a linear minorant of gauge(x - lambda)
/// for every nearby lambda; returns the maximizer.
template <class S>
Vec3<S> deepest_point(const Polytope<S>& c, const Lattice<S>& l, const Polytope<S>& cell,
                      const std::vector<LatticePoint<S>>& candidates);

}  // namespace latcov
