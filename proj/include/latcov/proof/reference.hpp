#pragma once

#include <string>
#include <vector>

#include "latcov/proof/constraint.hpp"
#include "latcov/proof/tables.hpp"

// Hard-coded reference data the mechanized checks are compared against:
// the closed pieces on face 0, the condition list, and the category lists.
namespace latcov::proof::reference {

/// Generators of the closure of piece m on face 0.
std::vector<V3> piece_hull(int m);

/// Generators of the solid part of region 1 on face 0, and the relative
/// interior triangle listed alongside it.
std::vector<V3> region_hull();
std::vector<V3> region_triangle();

/// Pieces in each membership class 1..5.
const std::vector<int>& piece_class_set(int j);

/// Auxiliary hulls used by the conditioned clauses, by name.
std::vector<V3> aux_hull(const std::string& name);

/// Every condition with its id: coverage 6..11, intra-face 12..29,
/// cross-face 30..59.
const std::vector<Constraint>& conditions();

/// Condition ids that rely on the hole argument rather than a plain
/// distance bound.
bool uses_hole_argument(int id);

/// Listed per-face families by category 1..9 (index 0 unused).
const std::vector<std::vector<std::vector<int>>>& categories();

}  // namespace latcov::proof::reference
