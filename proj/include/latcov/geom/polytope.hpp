#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latcov/arith/eigen_support.hpp"
#include "latcov/arith/interval.hpp"

namespace latcov {

/// The closed halfspace {x : normal . x <= offset}.
template <class S>
struct HalfSpace {
  Vec3<S> normal;
  S offset;

  bool operator==(const HalfSpace& o) const { return normal == o.normal && offset == o.offset; }
};

/// Bounded convex body with synchronized V- and H-representations.
///
/// `dim` is -1 for the empty set. For dim 3, `facets` are the facet
/// inequalities in canonical scaling and sorted order, and `facet_vertices[i]`
/// lists the vertices of facet i in cyclic order. For dim < 3, `facets` holds
/// the affine-hull equalities (as opposite halfspace pairs) followed by the
/// inequalities bounding the body inside its hull; `facet_vertices` is empty.
template <class S>
struct Polytope {
  int dim = -1;
  std::vector<Vec3<S>> vertices;
  std::vector<HalfSpace<S>> facets;
  std::vector<std::vector<int>> facet_vertices;

  bool empty() const { return dim < 0; }
  bool solid() const { return dim == 3; }

  bool operator==(const Polytope& o) const {
    return dim == o.dim && vertices == o.vertices && facets == o.facets;
  }
};

/// A finite union of solid polytopes with pairwise disjoint interiors.
template <class S>
using CellComplex = std::vector<Polytope<S>>;

template <class S>
struct Box3 {
  Vec3<S> lo, hi;
};

enum class Tri { no, yes, undecided };

// Construction ---------------------------------------------------------------

template <class S>
Polytope<S> hull(std::vector<Vec3<S>> points);

/// Bounded intersection of halfspaces, by exact vertex enumeration.
template <class S>
Polytope<S> from_halfspaces(const std::vector<HalfSpace<S>>& hs);

template <class S>
HalfSpace<S> canonical(HalfSpace<S> h);

// Operations -----------------------------------------------------------------

/// p intersected with the closed halfspace h.
template <class S>
Polytope<S> clip(const Polytope<S>& p, const HalfSpace<S>& h);

template <class S>
Polytope<S> intersect(const Polytope<S>& a, const Polytope<S>& b);

template <class S>
Polytope<S> minkowski_sum(const Polytope<S>& a, const Polytope<S>& b);

/// Cells covering cl(a) minus the interiors of all b_i.
template <class S>
CellComplex<S> subtract(const Polytope<S>& a, const std::vector<Polytope<S>>& bs);

template <class S>
CellComplex<S> subtract(const CellComplex<S>& a, const std::vector<Polytope<S>>& bs);

/// Single polytope equal to the union of the cells when that union is convex.
template <class S>
std::optional<Polytope<S>> merge_if_convex(const CellComplex<S>& cells);

template <class S>
bool contains(const Polytope<S>& outer, const Vec3<S>& x);

template <class S>
bool contains(const Polytope<S>& outer, const Polytope<S>& inner);

template <class S>
S gauge(const Polytope<S>& c, const Vec3<S>& x);

template <class S>
S volume(const Polytope<S>& p);

template <class S>
S volume(const CellComplex<S>& cells);

template <class S>
Polytope<S> translate(const Polytope<S>& p, const Vec3<S>& v);

template <class S>
Polytope<S> scale(const Polytope<S>& p, const S& s);

/// Image under x -> m x for an invertible matrix m.
template <class S>
Polytope<S> transform(const Polytope<S>& p, const Mat3<S>& m);

template <class S>
Polytope<S> negate(const Polytope<S>& p) {
  return scale(p, S(-1));
}

template <class S>
Box3<S> bbox(const Polytope<S>& p);

template <class S>
Vec3<S> vertex_centroid(const Polytope<S>& p);

/// True iff the vertex set is closed under negation.
template <class S>
bool centrally_symmetric(const Polytope<S>& p);

/// Two cells overlap in a solid region.
template <class S>
bool interiors_meet(const Polytope<S>& a, const Polytope<S>& b);

// Interval-mode views --------------------------------------------------------

/// Enclosures of the facet inequalities of an exact polytope.
struct IntervalBody {
  std::vector<std::pair<Vec3<Interval>, Interval>> facets;
};

template <class S>
IntervalBody to_interval_body(const Polytope<S>& p, unsigned bits = 96);

Interval gauge(const IntervalBody& c, const Vec3<Interval>& x);

/// yes / no when certain, undecided when an enclosure straddles a facet.
Tri contains(const IntervalBody& c, const Vec3<Interval>& x);

}  // namespace latcov

#define LATCOV_GEOM_DECLARE(S, EXTERN)                                                      \
  EXTERN template latcov::Polytope<S> latcov::hull<S>(std::vector<latcov::Vec3<S>>);        \
  EXTERN template latcov::Polytope<S> latcov::from_halfspaces<S>(                           \
      const std::vector<latcov::HalfSpace<S>>&);                                            \
  EXTERN template latcov::HalfSpace<S> latcov::canonical<S>(latcov::HalfSpace<S>);          \
  EXTERN template latcov::Polytope<S> latcov::clip<S>(const latcov::Polytope<S>&,           \
                                                      const latcov::HalfSpace<S>&);         \
  EXTERN template latcov::Polytope<S> latcov::intersect<S>(const latcov::Polytope<S>&,      \
                                                           const latcov::Polytope<S>&);     \
  EXTERN template latcov::Polytope<S> latcov::minkowski_sum<S>(const latcov::Polytope<S>&,  \
                                                               const latcov::Polytope<S>&); \
  EXTERN template latcov::CellComplex<S> latcov::subtract<S>(                               \
      const latcov::Polytope<S>&, const std::vector<latcov::Polytope<S>>&);                 \
  EXTERN template latcov::CellComplex<S> latcov::subtract<S>(                               \
      const latcov::CellComplex<S>&, const std::vector<latcov::Polytope<S>>&);              \
  EXTERN template std::optional<latcov::Polytope<S>> latcov::merge_if_convex<S>(            \
      const latcov::CellComplex<S>&);                                                       \
  EXTERN template bool latcov::contains<S>(const latcov::Polytope<S>&,                      \
                                           const latcov::Vec3<S>&);                         \
  EXTERN template bool latcov::contains<S>(const latcov::Polytope<S>&,                      \
                                           const latcov::Polytope<S>&);                     \
  EXTERN template S latcov::gauge<S>(const latcov::Polytope<S>&, const latcov::Vec3<S>&);   \
  EXTERN template S latcov::volume<S>(const latcov::Polytope<S>&);                          \
  EXTERN template S latcov::volume<S>(const latcov::CellComplex<S>&);                       \
  EXTERN template latcov::Polytope<S> latcov::translate<S>(const latcov::Polytope<S>&,      \
                                                           const latcov::Vec3<S>&);         \
  EXTERN template latcov::Polytope<S> latcov::scale<S>(const latcov::Polytope<S>&,          \
                                                       const S&);                           \
  EXTERN template latcov::Polytope<S> latcov::transform<S>(const latcov::Polytope<S>&,      \
                                                           const latcov::Mat3<S>&);         \
  EXTERN template latcov::Box3<S> latcov::bbox<S>(const latcov::Polytope<S>&);              \
  EXTERN template latcov::Vec3<S> latcov::vertex_centroid<S>(const latcov::Polytope<S>&);   \
  EXTERN template bool latcov::centrally_symmetric<S>(const latcov::Polytope<S>&);          \
  EXTERN template bool latcov::interiors_meet<S>(const latcov::Polytope<S>&,                \
                                                 const latcov::Polytope<S>&);               \
  EXTERN template latcov::IntervalBody latcov::to_interval_body<S>(                         \
      const latcov::Polytope<S>&, unsigned);

LATCOV_GEOM_DECLARE(latcov::Rational, extern)
LATCOV_GEOM_DECLARE(latcov::Quadratic, extern)
