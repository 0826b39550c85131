#pragma once

#include <string>
#include <variant>
#include <vector>

#include "latcov/arith/scalar.hpp"
#include "latcov/lattice/lattice.hpp"

namespace latcov {

using AnyPolytope = std::variant<Polytope<Rational>, Polytope<Quadratic>>;

/// Lattice whose basis is only known to interval precision.
struct IntervalLattice {
  std::string name;
  Mat3<Interval> basis;
};

using AnyLattice = std::variant<Lattice<Rational>, Lattice<Quadratic>, IntervalLattice>;

struct CatalogEntry {
  std::string name;
  std::string solid;
  Field field;
  AnyPolytope body;
  std::vector<AnyLattice> lattices;
  int expected_vertices = 0;
  int expected_facets = 0;
};

/// Names accepted by make(), in display order.
const std::vector<std::string>& catalog_names();

/// Throws std::out_of_range for an unknown name.
CatalogEntry make(const std::string& name);

/// The golden ratio (1 + sqrt 5) / 2.
Quadratic golden();

// Building blocks shared with the proof module and tests.
Polytope<Rational> octahedron();
Polytope<Rational> cube();
/// conv{(0,0,1), (1/3,0,2/3), (0,1/3,2/3), (1/3,1/3,1)}.
Polytope<Rational> tetrahedron_t();
Lattice<Rational> minkowski_lattice();

const std::string& lattice_name(const AnyLattice& l);
int polytope_vertices(const AnyPolytope& p);
int polytope_facets(const AnyPolytope& p);

}  // namespace latcov
