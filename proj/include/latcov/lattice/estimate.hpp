#pragma once

#include <cstddef>
#include <vector>

#include "latcov/geom/polytope.hpp"
#include "latcov/lattice/lattice.hpp"

namespace latcov {

/// Body and lattice with interval-valued data.
struct IntervalProblem {
  IntervalBody body;
  std::vector<Vec3<Interval>> body_vertices;
  Mat3<Interval> basis;  // rows
};

template <class S>
IntervalProblem make_interval_problem(const Polytope<S>& c, const Mat3<Interval>& basis,
                                      unsigned bits = 96);

Mat3<Interval> enclose_basis(const Mat3<Rational>& b);
Mat3<Interval> enclose_basis(const Mat3<Quadratic>& b, unsigned bits = 96);

struct GammaEstimate {
  Rational lower, upper;      // lower <= gamma <= upper, certified
  bool converged = false;     // upper - lower <= tol
  std::size_t boxes = 0;      // boxes whose bounds were evaluated
  std::size_t center_evals = 0;
  Vec3<Interval> witness;     // a point with nearest-lattice gauge >= lower
};

/// Branch-and-bound over the fundamental domain in lattice coordinates.
/// Upper bounds use convexity of the gauge over each box; lower bounds
/// use certified nearest-lattice distances at box centers.
GammaEstimate estimate_gamma(const IntervalProblem& p, const Rational& tol,
                             std::size_t max_boxes = 2000000);

/// Certified nearest-lattice gauge enclosure at x, given in lattice coordinates
/// inside [0,1]^3: returns [lo, hi] with lo <= min_lambda gauge(x - lambda).
Interval nearest_gauge_interval(const IntervalProblem& p, const Vec3<Rational>& coords);

/// Interval-mode packing check: min gauge over nonzero lattice vectors.
struct IntervalPacking {
  Tri ok = Tri::undecided;
  Interval min_gauge;
  Coeffs witness{0, 0, 0};
};

IntervalPacking check_packing_interval(const IntervalProblem& p);

}  // namespace latcov
