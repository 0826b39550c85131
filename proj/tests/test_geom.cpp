#include <doctest.h>

#include <sstream>

#include "latcov/arith/errors.hpp"
#include "latcov/geom/obj.hpp"
#include "latcov/geom/polytope.hpp"
#include "latcov/geom/symmetry.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace latcov;
using oracle::q;

namespace {

using V = Vec3<Rational>;

V v(long x, long y, long z) { return vec3<Rational>(q(x), q(y), q(z)); }

Polytope<Rational> box(long w) {
  std::vector<V> pts;
  for (int s = 0; s < 8; ++s) pts.push_back(v(s & 1 ? w : -w, s & 2 ? w : -w, s & 4 ? w : -w));
  return hull(pts);
}

Polytope<Rational> cross(long w) {
  return hull(std::vector<V>{v(w, 0, 0), v(-w, 0, 0), v(0, w, 0), v(0, -w, 0), v(0, 0, w), v(0, 0, -w)});
}

}  // namespace

TEST_CASE("hull of standard bodies") {
  auto c = box(1);
  CHECK(c.solid());
  CHECK(c.vertices.size() == 8);
  CHECK(c.facets.size() == 6);
  CHECK(volume(c) == 8);

  auto o = cross(1);
  CHECK(o.vertices.size() == 6);
  CHECK(o.facets.size() == 8);
  CHECK(volume(o) == q(4, 3));
  for (const auto& f : o.facet_vertices) CHECK(f.size() == 3);

  // interior and duplicate generators are dropped
  auto pts = std::vector<V>{v(1, 0, 0), v(-1, 0, 0), v(0, 1, 0), v(0, -1, 0), v(0, 0, 1), v(0, 0, -1),
                            v(0, 0, 0), v(1, 0, 0)};
  CHECK(hull(pts) == o);
}

TEST_CASE("lower-dimensional hulls") {
  CHECK(hull(std::vector<V>{}).empty());
  CHECK(hull(std::vector<V>{v(1, 2, 3)}).dim == 0);
  CHECK(hull(std::vector<V>{v(0, 0, 0), v(1, 1, 1), v(2, 2, 2)}).dim == 1);
  auto sq = hull(std::vector<V>{v(0, 0, 0), v(1, 0, 0), v(0, 1, 0), v(1, 1, 0)});
  CHECK(sq.dim == 2);
  CHECK(volume(sq) == 0);
}

TEST_CASE("halfspace form round trip") {
  auto o = cross(1);
  auto back = from_halfspaces(o.facets);
  CHECK(back == o);
  // a redundant halfspace changes nothing
  auto hs = o.facets;
  hs.push_back({v(1, 0, 0), q(5)});
  CHECK(from_halfspaces(hs) == o);
  // contradictory halfspaces give the empty set
  CHECK(from_halfspaces(std::vector<HalfSpace<Rational>>{{v(1, 0, 0), q(-1)}, {v(-1, 0, 0), q(-1)}}).empty());
}

TEST_CASE("gauge and containment") {
  auto o = cross(1);
  CHECK(gauge(o, v(1, 1, 1)) == 3);
  CHECK(gauge(o, v(0, 0, 0)) == 0);
  CHECK(gauge(o, vec3<Rational>(q(1, 2), q(-1, 3), q(1, 6))) == 1);
  CHECK(contains(o, vec3<Rational>(q(1, 2), q(-1, 3), q(1, 6))));
  CHECK_FALSE(contains(o, vec3<Rational>(q(1, 2), q(1, 3), q(1, 3))));
  CHECK(contains(box(1), o));
  CHECK_FALSE(contains(o, box(1)));
  oracle::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    auto x = rng.point(7, 5);
    CHECK(gauge(o, oracle::v3(x)) == oracle::l1(x));
    CHECK(gauge(box(1), oracle::v3(x)) == std::max({abs(x[0]), abs(x[1]), abs(x[2])}));
  }
}

TEST_CASE("affine maps") {
  auto o = cross(1);
  CHECK(volume(scale(o, q(3, 2))) == q(4, 3) * q(27, 8));
  CHECK(volume(translate(o, v(5, -1, 2))) == q(4, 3));
  CHECK(vertex_centroid(translate(o, v(5, -1, 2))) == v(5, -1, 2));
  CHECK(centrally_symmetric(o));
  CHECK_FALSE(centrally_symmetric(translate(o, v(1, 0, 0))));
  Mat3<Rational> m;
  m << 1, 1, 0, 0, 1, 0, 0, 0, 2;
  CHECK(volume(transform(o, m)) == q(8, 3));
  auto b = bbox(translate(box(1), v(1, 2, 3)));
  CHECK(b.lo == v(0, 1, 2));
  CHECK(b.hi == v(2, 3, 4));
}

TEST_CASE("intersection and interiors") {
  auto a = box(1), b = translate(box(1), v(1, 0, 0));
  auto i = intersect(a, b);
  CHECK(volume(i) == 4);
  CHECK(interiors_meet(a, b));
  auto c = translate(box(1), v(2, 0, 0));
  CHECK(intersect(a, c).dim == 2);
  CHECK_FALSE(interiors_meet(a, c));
  CHECK(intersect(a, translate(box(1), v(3, 0, 0))).empty());
}

TEST_CASE("subtraction partitions the difference") {
  auto a = box(1);
  auto cells = subtract(a, std::vector<Polytope<Rational>>{cross(1)});
  CHECK(volume(cells) == 8 - q(4, 3));
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK_FALSE(interiors_meet(cells[i], cells[j]));
  CHECK(subtract(cross(1), std::vector<Polytope<Rational>>{box(1)}).empty());
  auto merged = merge_if_convex(subtract(a, std::vector<Polytope<Rational>>{translate(box(1), v(1, 0, 0))}));
  REQUIRE(merged);
  CHECK(volume(*merged) == 4);
}

TEST_CASE("minkowski sum of two cubes") {
  CHECK(minkowski_sum(box(1), box(2)) == box(3));
  CHECK(volume(minkowski_sum(cross(1), cross(1))) == q(32, 3));
}

TEST_CASE("octahedral group") {
  const auto& g = octahedral_group();
  CHECK(g.size() == 48);
  for (const auto& a : g) {
    CHECK(a * a.inverse() == SignedPerm::identity());
    CHECK(apply_symmetry(a, cross(1)) == cross(1));
  }
  auto r = SignedPerm::rot_z();
  CHECK(r * r * r * r == SignedPerm::identity());
  CHECK(r.apply(v(1, 0, 0)) == v(0, 1, 0));
  CHECK(z_rotations().size() == 4);
}

TEST_CASE("interval body encloses the exact gauge") {
  auto o = cross(1);
  auto ib = to_interval_body(o);
  oracle::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    auto x = rng.point(5, 4);
    Vec3<Interval> xi = vec3<Interval>(Interval(x[0]), Interval(x[1]), Interval(x[2]));
    CHECK(gauge(ib, xi).contains(oracle::l1(x)));
  }
  CHECK(contains(ib, vec3<Interval>(q(1, 10), q(1, 10), q(1, 10))) == Tri::yes);
  CHECK(contains(ib, vec3<Interval>(q(1), q(1), q(1))) == Tri::no);
}

TEST_CASE("obj export") {
  ObjMesh mesh;
  add_to_mesh(mesh, cross(1), "O");
  CHECK(mesh.vertices.size() == 6);
  CHECK(mesh.triangles.size() == 8);
  std::ostringstream os;
  write_obj(os, mesh);
  auto s = os.str();
  CHECK(s.find("g O") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), 'f') >= 8);
}

TEST_CASE("property: hull round trips") {
  auto r = props::hull_roundtrips(40, 101);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: subtraction against point sampling") {
  auto r = props::subtract_monte_carlo(5000, 102);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: gauge axioms") {
  auto r = props::gauge_axioms(1000, 103);
  INFO(r.first_failure);
  CHECK(r.ok());
}
