#include <doctest.h>

#include "latcov/catalog/catalog.hpp"
#include "latcov/catalog/reproduce.hpp"
#include "latcov/lattice/gamma.hpp"
#include "oracle.hpp"

using namespace latcov;
using oracle::q;

TEST_CASE("catalog bodies have the expected combinatorics") {
  CHECK(catalog_names().size() == 12);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto e = make(name);
    CHECK(e.name == name);
    CHECK(polytope_vertices(e.body) == e.expected_vertices);
    CHECK(polytope_facets(e.body) == e.expected_facets);
    std::visit(
        [&](const auto& p) {
          CHECK(p.solid());
          if (name != "T") CHECK(centrally_symmetric(p));
          // Euler: V - E + F = 2
          std::size_t edges = 0;
          for (const auto& f : p.facet_vertices) edges += f.size();
          CHECK(long(p.vertices.size()) - long(edges / 2) + long(p.facets.size()) == 2);
        },
        e.body);
    if (name != "T") CHECK_FALSE(e.lattices.empty());
  }
  CHECK_THROWS(make("C10"));
}

TEST_CASE("catalog fields match their bodies") {
  for (const auto& name : catalog_names()) {
    auto e = make(name);
    bool quad = std::holds_alternative<Polytope<Quadratic>>(e.body);
    CHECK(quad == (e.field.kind == Field::Kind::quadratic));
    if (quad) CHECK((e.field.d == 2 || e.field.d == 5));
  }
}

TEST_CASE("tetrahedral hole") {
  auto t = tetrahedron_t();
  CHECK(volume(t) == q(1, 81));
  CHECK_FALSE(centrally_symmetric(t));
}

TEST_CASE("golden ratio") {
  Quadratic t = golden();
  CHECK(t * t == t + Quadratic(1));
  CHECK(t > Quadratic(1));
}

TEST_CASE("lifting a rational lattice keeps its points") {
  auto l = minkowski_lattice();
  auto lq = lift(l);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lq.basis()(i, j) == Quadratic(l.basis()(i, j)));
  CHECK(lq.det() == Quadratic(l.det()));
}

TEST_CASE("rational catalog lattices pack their bodies") {
  for (const auto& name : {"octahedron", "C0", "C1", "C7"}) {
    CAPTURE(name);
    auto e = make(name);
    const auto& c = std::get<Polytope<Rational>>(e.body);
    for (const auto& al : e.lattices) {
      const auto& l = std::get<Lattice<Rational>>(al);
      CHECK(check_packing(c, l).ok);
    }
  }
}

TEST_CASE("reproductions") {
  CHECK(reproduction_ids().size() == 7);
  CHECK_THROWS_AS(reproduce("ex9"), std::out_of_range);
  auto m = reproduce("minkowski");
  CHECK(m.verdict == Verdict::verified);
  auto ex1 = reproduce("ex1");
  CHECK(ex1.verdict == Verdict::verified);
  REQUIRE(ex1.claims.size() == 1);
  CHECK(ex1.claims[0].mode == "exact");
  CHECK(ex1.claims[0].discrepancies.empty());
  auto j = reproduction_json(ex1);
  CHECK(j["id"] == "ex1");
  CHECK(j["verdict"] == "verified");
  CHECK(reproduction_text(ex1).find("ex1") != std::string::npos);
  CHECK(to_string(Verdict::undecided) == std::string("undecided"));
}
