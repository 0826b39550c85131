#pragma once

#include <array>
#include <string>
#include <vector>

#include "latcov/proof/constraint.hpp"
#include "latcov/proof/tables.hpp"

namespace latcov::proof {

/// Sets of pieces on one face satisfying the coverage clauses and every
/// intra-face exclusion, in lexicographic order of their sorted index lists.
std::vector<Mask> enumerate_feasible_sets(const std::vector<Constraint>& cs);

/// The inclusion-minimal members of enumerate_feasible_sets.
std::vector<Mask> enumerate_minimal_families(const std::vector<Constraint>& cs);

/// Lexicographic order on sorted index lists.
bool lex_less(Mask a, Mask b);

/// Category 1..9 of a minimal family from its size, the membership classes
/// of its pieces and, for one class-4 piece with class-2 company, whether
/// the closures touch. 0 if no category fits.
int classify_family(const FacePieceTable& t, Mask s);

struct FamilyReport {
  std::vector<Mask> families;
  std::array<std::vector<Mask>, 10> by_category;  // index 0: unclassified
  bool matches_reference = true;
  std::vector<std::string> diffs;
};

/// Groups the families into categories and compares with the printed lists.
FamilyReport categorize(const FacePieceTable& t, const std::vector<Mask>& families);

std::string set_str(Mask s);

}  // namespace latcov::proof
