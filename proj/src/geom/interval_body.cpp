#include "latcov/geom/polytope.hpp"

namespace latcov {

Interval gauge(const IntervalBody& c, const Vec3<Interval>& x) {
  Interval best(0);
  for (const auto& [n, off] : c.facets) best = max(best, Interval(n.dot(x) / off));
  return best;
}

Tri contains(const IntervalBody& c, const Vec3<Interval>& x) {
  Tri r = Tri::yes;
  for (const auto& [n, off] : c.facets) {
    Ordering o = compare(Interval(n.dot(x)), off);
    if (o == Ordering::greater) return Tri::no;
    if (o == Ordering::unknown) r = Tri::undecided;
  }
  return r;
}

}  // namespace latcov
