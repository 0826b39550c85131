#include <doctest.h>

#include "latcov/proof/tables.hpp"
#include "properties.hpp"

// Full-size property runs; the acceptance runner repeats them with its own seeds.

TEST_CASE("property sizes") {
  auto hr = props::hull_roundtrips(200, 7);
  INFO(hr.first_failure);
  CHECK(hr.ok());
  auto ga = props::gauge_axioms(10000, 8);
  INFO(ga.first_failure);
  CHECK(ga.ok());
  auto pb = props::packing_brute_force(50, 9);
  INFO(pb.first_failure);
  CHECK(pb.ok());
  auto t = latcov::proof::build_tables();
  auto sm = props::segment_midpoints(t, 100, 10);
  INFO(sm.first_failure);
  CHECK(sm.ok());
}
