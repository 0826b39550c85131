#include <doctest.h>

#include "latcov/catalog/catalog.hpp"
#include "latcov/lattice/estimate.hpp"
#include "latcov/lattice/gamma.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace latcov;
using oracle::q;

namespace {

using V = Vec3<Rational>;

Lattice<Rational> cubic(long s) { return Lattice<Rational>(Mat3<Rational>(Mat3<Rational>::Identity() * Rational(s))); }

}  // namespace

TEST_CASE("lattice basics") {
  auto l = minkowski_lattice();
  CHECK(abs(l.det()) == abs(oracle::det(oracle::rows_of(l.basis()))));
  CHECK(l.point({1, 0, 0}) == l.row(0));
  CHECK(l.point({1, -2, 3}) == l.row(0) - l.row(1) * Rational(2) + l.row(2) * Rational(3));
  V x = l.point({2, -1, 5});
  CHECK(l.coords(x) == vec3<Rational>(q(2), q(-1), q(5)));
  CHECK(l.scaled(q(2)).det() == l.det() * 8);
}

TEST_CASE("enumerate_points lists exactly the box") {
  auto l = minkowski_lattice();
  Box3<Rational> b{vec3<Rational>(q(-2), q(-3, 2), q(-1)), vec3<Rational>(q(2), q(1), q(5, 2))};
  auto pts = enumerate_points(l, b);
  auto m = oracle::rows_of(l.basis());
  std::size_t expect = 0;
  for (long a = -12; a <= 12; ++a)
    for (long c = -12; c <= 12; ++c)
      for (long e = -12; e <= 12; ++e) {
        bool in = true;
        for (int k = 0; k < 3; ++k) {
          Rational xk = m[0][k] * a + m[1][k] * c + m[2][k] * e;
          in = in && b.lo[k] <= xk && xk <= b.hi[k];
        }
        expect += in;
      }
  CHECK(pts.size() == expect);
  for (const auto& p : pts) {
    CHECK(p.x == l.point(p.coeffs));
    for (int k = 0; k < 3; ++k) CHECK((b.lo[k] <= p.x[k] && p.x[k] <= b.hi[k]));
  }
}

TEST_CASE("packing checks") {
  auto o = octahedron();
  auto l = minkowski_lattice();
  auto p = check_packing(o, l);
  CHECK(p.ok);
  CHECK(p.min_gauge == 2);
  CHECK(gauge(o, p.witness.x) == 2);
  auto tight = check_packing(o, l.scaled(q(19, 20)));
  CHECK_FALSE(tight.ok);
  CHECK(tight.min_gauge == q(19, 10));
  CHECK(check_packing(cube(), cubic(2)).ok);
  CHECK(check_packing(cube(), cubic(2)).min_gauge == 2);
}

TEST_CASE("covering checks are monotone in the radius") {
  auto o = octahedron();
  auto l = minkowski_lattice();
  for (auto [r, covered] : std::vector<std::pair<Rational, bool>>{
           {q(1), false}, {q(9, 8), false}, {q(7, 6), true}, {q(6, 5), true}, {q(2), true}}) {
    auto f = fundamental_cover_check(o, l, r);
    CHECK(f.covered() == covered);
    CHECK(f.method == "fundamental");
    if (!covered) CHECK(volume(f.residual) > 0);
  }
}

TEST_CASE("a zong certificate implies a real cover") {
  oracle::Rng rng(31);
  std::vector<std::pair<Polytope<Rational>, Lattice<Rational>>> cases = {
      {octahedron(), minkowski_lattice()},
      {cube(), cubic(2)},
      {std::get<Polytope<Rational>>(make("C7").body), std::get<Lattice<Rational>>(make("C7").lattices[0])}};
  for (const auto& [c, l] : cases) {
    for (Rational r : {q(1), q(7, 6), q(5, 4), q(3, 2)}) {
      int tried = 0;
      auto z = zong_cover_search(c, l, r, &tried);
      CHECK(tried >= 1);
      if (!z.covered()) continue;
      CHECK(fundamental_cover_check(c, l, r).covered());
      for (int i = 0; i < 50; ++i) {
        V x = oracle::v3(rng.point(40, 7));
        CHECK(nearest_gauge(c, l, x).first <= r);
      }
    }
  }
}

TEST_CASE("gamma bracket invariants") {
  std::vector<std::tuple<Polytope<Rational>, Lattice<Rational>, Rational>> cases = {
      {octahedron(), minkowski_lattice(), q(7, 6)},
      {cube(), cubic(2), q(1)},
      {octahedron(), std::get<Lattice<Rational>>(make("C1").lattices[0]), q(7, 6)},
      {std::get<Polytope<Rational>>(make("C7").body), std::get<Lattice<Rational>>(make("C7").lattices[0]), q(7, 6)}};
  oracle::Rng rng(32);
  for (const auto& [c, l, want] : cases) {
    auto g = gamma_bracket(c, l, q(1, 1000000));
    CHECK(g.lower <= g.upper);
    CHECK(g.exact());
    CHECK(g.lower == want);
    CHECK(g.upper_cover.covered());
    CHECK(g.upper_cover.radius == g.upper);
    CHECK(nearest_gauge(c, l, g.witness).first == g.lower);
    // the neighbor list is complete for the box, so its minimum is the nearest gauge
    REQUIRE_FALSE(g.neighbors.empty());
    Rational best = -1;
    for (const auto& n : g.neighbors) {
      Rational d = gauge(c, V(g.witness - n.x));
      if (best < 0 || d < best) best = d;
      for (int k = 0; k < 3; ++k) CHECK((g.neighbor_box.lo[k] <= n.x[k] && n.x[k] <= g.neighbor_box.hi[k]));
    }
    CHECK(best == g.lower);
    for (int i = 0; i < 100; ++i) CHECK(nearest_gauge(c, l, oracle::v3(rng.point(30, 11))).first <= g.upper);
  }
}

TEST_CASE("certified interval estimate brackets the exact value") {
  auto o = octahedron();
  auto l = minkowski_lattice();
  auto p = make_interval_problem(o, enclose_basis(l.basis()));
  auto e = estimate_gamma(p, q(1, 100));
  CHECK(e.converged);
  CHECK(e.lower <= q(7, 6));
  CHECK(q(7, 6) <= e.upper);
  CHECK(e.upper - e.lower <= q(1, 100));
  auto pk = check_packing_interval(p);
  CHECK(pk.ok != Tri::no);
  CHECK(pk.min_gauge.contains(2));
  auto bad = check_packing_interval(make_interval_problem(o, enclose_basis(l.scaled(q(9, 10)).basis())));
  CHECK(bad.ok == Tri::no);
}

TEST_CASE("property: packing against brute force") {
  auto r = props::packing_brute_force(10, 201);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: gamma under scaling") {
  for (Rational s : {q(2), q(3, 2)}) {
    auto r = props::gamma_scaling(s);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
}
