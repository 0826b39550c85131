#pragma once

#include <vector>

#include "latcov/proof/tables.hpp"

namespace latcov::proof {

/// Largest L1 distance between a point of `a` and a point of `b`. The L1
/// norm is convex, so the maximum over a pair of polytopes sits at a vertex
/// pair.
Rational max_l1_distance(const Cells& a, const Cells& b);

/// Lattice points of a strict packing cannot sit in `a` and `b` at once:
/// every pair is within L1 distance 2.
bool check_pair_exclusion(const Cells& a, const Cells& b);

/// conv{(0,1,1), (0,4/3,2/3), (1/3,1,2/3), (1/3,4/3,1)}: a translate of O
/// centered here, together with O, leaves a hole of covering radius 7/6.
Poly hole_region();

/// The distinct images of hole_region() under the 48 symmetries of O.
const std::vector<Poly>& hole_regions();

/// Every difference y - x (x in a, y in b) lies in 2O or in a hole region,
/// so co-occupancy violates the packing or forces gamma >= 7/6.
bool check_hole_difference(const Cells& a, const Cells& b);

/// check_hole_difference, falling back to the same test after discarding the
/// parts of a and b inside hole regions (such a point and the origin already
/// force gamma >= 7/6).
bool check_corollary2_exclusion(const Cells& a, const Cells& b);

/// Any of several placements of one target region (e.g. a piece and its
/// mirror image on the opposite face).
using Target = std::vector<Cells>;

struct ChainResult {
  bool trigger_ok = false;   // hull_h within 2O + x for all x in trigger
  bool witness_ok = false;   // each target within 2O + y for y in witness minus hull_h
  bool vacuous = false;      // witness minus hull_h is empty
  std::vector<int> failed_targets;

  bool ok() const { return trigger_ok && witness_ok; }
};

/// Geometric premise of a conditioned exclusion: a lattice point in the
/// trigger keeps every other lattice point out of hull_h, so a lattice point
/// in the witness lies in witness minus hull_h, from where it excludes the
/// targets.
ChainResult check_chained_condition(const Cells& trigger, const Poly& hull_h,
                                    const Cells& witness, const std::vector<Target>& targets);

/// True if some placement of the target is within distance 2 of all of `from`.
bool target_excluded(const Cells& from, const Target& target);

}  // namespace latcov::proof
